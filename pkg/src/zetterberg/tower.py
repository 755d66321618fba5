"""Maps between the levels F_q0 <= F_q <= F_{q^2} and the subgroup H.

Levels are named by tags: 'q2' (the ambient field), 'q', 'q0'.  All functions
are pure over an immutable FieldContext.
"""

from __future__ import annotations

from .errors import PreconditionViolated
from .gf import Field, FieldContext

LEVELS = ("q2", "q", "q0")


def level_degree(ctx: FieldContext, level: str) -> int:
    """Degree over F_p of the named level."""
    if level == "q2":
        return ctx.n
    if level == "q":
        return ctx.s * ctx.m
    if level == "q0":
        return ctx.m
    raise ValueError(f"unknown level {level!r}")


def level_order(ctx: FieldContext, level: str) -> int:
    return ctx.p ** level_degree(ctx, level)


def in_level(ctx: FieldContext, x: int, level: str) -> bool:
    """Subfield membership: x is fixed by the level's Frobenius."""
    return ctx.pow(x, level_order(ctx, level)) == x


def trace(ctx: FieldContext, x: int, from_level: str, to_level: str) -> int:
    d_from = level_degree(ctx, from_level)
    d_to = level_degree(ctx, to_level)
    if d_from % d_to:
        raise ValueError(f"{to_level} is not a subfield of {from_level}")
    if not in_level(ctx, x, from_level):
        raise PreconditionViolated(f"element not in level {from_level}")
    step = ctx.p**d_to
    t = 0
    y = x
    for _ in range(d_from // d_to):
        t = ctx.add(t, y)
        y = ctx.pow(y, step)
    return t


def norm(ctx: FieldContext, x: int, from_level: str, to_level: str) -> int:
    d_from = level_degree(ctx, from_level)
    d_to = level_degree(ctx, to_level)
    if d_from % d_to:
        raise ValueError(f"{to_level} is not a subfield of {from_level}")
    if not in_level(ctx, x, from_level):
        raise PreconditionViolated(f"element not in level {from_level}")
    step = ctx.p**d_to
    t = 1
    y = x
    for _ in range(d_from // d_to):
        t = ctx.mul(t, y)
        y = ctx.pow(y, step)
    return t


def quadratic_character(ctx: FieldContext, x: int, level: str) -> int:
    """chi of the named subfield: 1 on nonzero squares, -1 on non-squares, 0 at 0."""
    if ctx.p == 2:
        raise PreconditionViolated("quadratic character needs odd characteristic")
    if x == 0:
        return 0
    if not in_level(ctx, x, level):
        raise PreconditionViolated(f"element not in level {level}")
    t = ctx.pow(x, (level_order(ctx, level) - 1) // 2)
    if t == 1:
        return 1
    if t == ctx.neg(1):
        return -1
    raise ArithmeticError("character value outside {1,-1}")  # unreachable


def chi_field(F: Field, x: int) -> int:
    """Quadratic character of a standalone odd-order field."""
    if F.p == 2:
        raise PreconditionViolated("quadratic character needs odd characteristic")
    if x == 0:
        return 0
    t = F.pow(x, (F.order - 1) // 2)
    return 1 if t == 1 else -1


def in_subgroup(ctx: FieldContext, x: int, tag: str) -> bool:
    """Membership in H, F_q^* or F_q0^* by the order test x^|subgroup| = 1."""
    if x == 0:
        return False
    return ctx.pow(x, ctx.subgroup_order(tag)) == 1


def subgroup_elements(ctx: FieldContext, tag: str) -> list[int]:
    """All subgroup element codes, as consecutive powers of its generator."""
    gen = ctx.pow(ctx.g, ctx.subgroup_exponents[tag])
    out = [1]
    x = gen
    while x != 1:
        out.append(x)
        x = ctx.mul(x, gen)
    return out


def subfield_elements(ctx: FieldContext, level: str) -> list[int]:
    """Sorted codes of the named subfield (canonical element order)."""
    return ctx.field.subfield_elements(level_degree(ctx, level))


def squares_q0(ctx: FieldContext) -> list[int]:
    """Sorted nonzero squares of F_q0 (odd characteristic)."""
    if ctx.p == 2:
        raise PreconditionViolated("squares of F_q0 need odd characteristic")
    sq = {ctx.mul(c, c) for c in subfield_elements(ctx, "q0") if c != 0}
    return sorted(sq)


def in_scaled_H(ctx: FieldContext, y: int) -> bool:
    """Membership in F_q0 * H = {c*h : c in F_q0, h in H}.

    Decided through the norm to F_q: y*conj(y) = y^(q+1) must be c^2 for some
    c in F_q0^* (odd q0), or any element of F_q0^* (even q0, where squaring
    is a bijection).  By convention 0 belongs (c = 0).
    """
    if y == 0:
        return True
    w = ctx.pow(y, ctx.q + 1)
    # w must land in F_q0
    if ctx.pow(w, ctx.q0) != w:
        return False
    if ctx.p == 2:
        return True
    # odd: w itself must be a square of F_q0^*
    return ctx.pow(w, (ctx.q0 - 1) // 2) == 1
