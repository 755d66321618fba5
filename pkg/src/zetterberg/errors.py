"""Exception types shared across the package."""


class ZetterbergError(Exception):
    """Base class for all package errors."""


class SizeCapExceeded(ZetterbergError):
    """A computation would exceed a configured size/work cap."""


class Undecidable(ZetterbergError):
    """No feasible method can decide the requested quantity under current caps."""


class FormulaMismatch(ZetterbergError):
    """A closed-form identity disagreed with direct computation (implementation bug)."""


class PreconditionViolated(ZetterbergError):
    """An operation was called outside its stated domain."""
