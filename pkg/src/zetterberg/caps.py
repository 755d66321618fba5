"""Work/size caps.

All exhaustive machinery is bounded by explicit caps; exceeding a cap raises
SizeCapExceeded rather than truncating silently.  Caps can be overridden via a
key=value config file whose path is taken from the ZETTERBERG_CONFIG
environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_CONFIG = "ZETTERBERG_CONFIG"


@dataclass(frozen=True)
class Caps:
    # largest ambient field order p**(2*s*m) a FieldContext may be built for
    max_ambient_order: int = 2**32
    # largest syndrome space q**2 the covering-radius BFS will sweep
    oracle_cap: int = 2**20
    # character-evaluation budget for a criterion scan (counted as consumed)
    scan_cap: int = 2**28
    # largest field order q the criterion scan will build tables for
    criterion_order_cap: int = 2**25
    # discrete-log tables are only built for fields up to this order
    table_cap: int = 2**24
    # weight-4 exhaustive search only for codes up to this length
    exhaustive_len_cap: int = 64
    # full-codeword enumeration only while q0**dimension stays below this
    enum_codewords_cap: int = 2**16


_FIELDS = {f: int for f in Caps.__dataclass_fields__}


def load_caps(path: str | None = None) -> Caps:
    """Caps from a key=value file; defaults when no file is configured."""
    caps = Caps()
    if path is None:
        path = os.environ.get(ENV_CONFIG)
    if not path:
        return caps
    overrides = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _FIELDS:
                raise ValueError(f"unknown cap {key!r} in {path}")
            overrides[key] = int(value.strip(), 0)
    return replace(caps, **overrides)


DEFAULT_CAPS = Caps()
