"""Generalized Zetterberg codes and their half-length variants.

A code is pinned to an ambient FieldContext: the full code has length q+1
with parity condition sum(c_i * xi^i) = 0 over all of H = <xi>, the half code
(odd q0 only) keeps the first (q+1)/2 positions.  Codewords are plain lists
of F_q0 coefficient codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .caps import Caps
from .errors import PreconditionViolated, SizeCapExceeded
from .gf import FieldContext
from . import charsum, tower


@dataclass
class ZetterbergCode:
    ctx: FieldContext
    variant: str                      # "full" | "half"
    xi: int = field(init=False)
    length: int = field(init=False)
    dimension: int = field(init=False)
    positions: list = field(init=False)   # xi^0 .. xi^(length-1)
    h_powers: list = field(init=False)    # xi^0 .. xi^q (all of H, in order)

    def __post_init__(self):
        ctx = self.ctx
        if self.variant not in ("full", "half"):
            raise ValueError("variant must be 'full' or 'half'")
        if self.variant == "half" and ctx.p == 2:
            raise PreconditionViolated("half code requires odd q0")
        self.xi = ctx.xi
        n_full = ctx.q + 1
        self.length = n_full if self.variant == "full" else n_full // 2
        self.dimension = self.length - 2 * ctx.s
        if self.dimension < 0:
            raise PreconditionViolated(
                f"2s = {2*ctx.s} exceeds length {self.length}")
        powers = [1]
        for _ in range(n_full - 1):
            powers.append(ctx.mul(powers[-1], self.xi))
        self.h_powers = powers
        self.positions = powers[: self.length]
        self._pos_index = {h: i for i, h in enumerate(powers)}

    @property
    def q0(self) -> int:
        return self.ctx.q0

    @property
    def s(self) -> int:
        return self.ctx.s

    def __repr__(self):
        return (f"ZetterbergCode(q0={self.q0}, s={self.s}, {self.variant}, "
                f"[{self.length},{self.dimension}])")


def build_code(ctx: FieldContext, variant: str) -> ZetterbergCode:
    return ZetterbergCode(ctx, variant)


# ---------------------------------------------------------------------------
# syndrome / membership


def syndrome(code: ZetterbergCode, word) -> int:
    """sum(c_i * xi^i) in the ambient field; 0 iff the word is a codeword."""
    if len(word) != code.length:
        raise ValueError(f"word length {len(word)} != code length {code.length}")
    ctx = code.ctx
    acc = 0
    for c, pos in zip(word, code.positions):
        if c:
            acc = ctx.add(acc, ctx.mul(c, pos))
    return acc


def contains(code: ZetterbergCode, word) -> bool:
    return syndrome(code, word) == 0


def weight(word) -> int:
    return sum(1 for c in word if c)


def support(word) -> list[int]:
    return [i for i, c in enumerate(word) if c]


def cyclic_shift(code: ZetterbergCode, word) -> list:
    """One step of the code's shift symmetry.

    Full code: plain cyclic shift.  Half code: constacyclic shift, the entry
    wrapping around picks up a sign (X^((q+1)/2) acts as -1).
    """
    if code.variant == "full":
        return [word[-1]] + list(word[:-1])
    return [code.ctx.neg(word[-1])] + list(word[:-1])


def codeword_to_json(code: ZetterbergCode, word) -> dict:
    ctx = code.ctx
    return {
        "q0": code.q0,
        "s": code.s,
        "variant": code.variant,
        "support": support(word),
        "coeffs": [list(ctx.decode(word[i])) for i in support(word)],
    }


# ---------------------------------------------------------------------------
# parity-check view


def _subfield_coord_map(code: ZetterbergCode):
    """Decomposition of ambient elements over the F_q0-basis (1, xi, ..., xi^(2s-1)).

    Returns a function element -> tuple of 2s subfield codes.  Internally an
    F_p-linear solve against the product basis xi^j * gamma^t where gamma
    generates F_q0 over F_p.
    """
    ctx = code.ctx
    p, n, m, s = ctx.p, ctx.n, ctx.m, ctx.s
    gamma = ctx.pow(ctx.g, (ctx.order - 1) // (ctx.q0 - 1)) if ctx.q0 > 2 else 1
    gamma_pows = [1]
    for _ in range(m - 1):
        gamma_pows.append(ctx.mul(gamma_pows[-1], gamma))
    basis = []
    for j in range(2 * s):
        for t in range(m):
            basis.append(ctx.mul(code.h_powers[j], gamma_pows[t]))
    # invert the n x n matrix whose columns are the basis digit vectors
    cols = [ctx.decode(b) for b in basis]
    mat = [[cols[c][r] for c in range(n)] for r in range(n)]
    aug = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [v * inv % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    inv_rows = [row[n:] for row in aug]

    def coords(x: int) -> tuple:
        digits = ctx.decode(x)
        sol = [sum(inv_rows[r][c] * digits[c] for c in range(n)) % p for r in range(n)]
        out = []
        for j in range(2 * s):
            acc = 0
            for t in range(m):
                c = sol[j * m + t]
                if c:
                    acc = ctx.add(acc, ctx.mul(ctx.encode([c]), gamma_pows[t]))
            out.append(acc)
        return tuple(out)

    return coords


def parity_check_matrix(code: ZetterbergCode) -> list[list[int]]:
    """2s x length matrix over F_q0 (entries are ambient codes of subfield
    elements); column i holds the coordinates of xi^i."""
    coords = _subfield_coord_map(code)
    columns = [coords(pos) for pos in code.positions]
    return [[columns[i][r] for i in range(code.length)] for r in range(2 * code.ctx.s)]


def matrix_rank(ctx: FieldContext, rows) -> int:
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ctx.inv(rows[rank][col])
        rows[rank] = [ctx.mul(v, inv) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def kernel_basis(code: ZetterbergCode) -> list[list[int]]:
    """Basis of the code (kernel of the parity-check matrix) over F_q0."""
    ctx = code.ctx
    rows = [list(r) for r in parity_check_matrix(code)]
    ncols = code.length
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ctx.inv(rows[rank][col])
        rows[rank] = [ctx.mul(v, inv) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = ctx.neg(rows[r][fc])
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# minimum distance


def min_distance_formula(q0: int, s: int, variant: str) -> int | None:
    """Closed-form minimum distance; None for the zero-dimensional case."""
    if q0 < 2 or s < 1:
        raise ValueError("q0 >= 2 and s >= 1 required")
    if variant == "full":
        if q0 % 2 == 0:
            if q0 == 2:
                return 5 if s % 2 == 0 else 3
            return 4 if s % 2 == 0 else 3
        return 2
    if variant == "half":
        if q0 % 2 == 0:
            raise PreconditionViolated("half code requires odd q0")
        if q0 == 3:
            return 5 if s >= 2 else None  # s=1 is the zero-dimensional [2,0]
        return 4 if s % 2 == 0 else 3
    raise ValueError("variant must be 'full' or 'half'")


def _in_q0_star(ctx: FieldContext, x: int) -> bool:
    return x != 0 and ctx.pow(x, ctx.q0 - 1) == 1


def weight2_word(code: ZetterbergCode) -> list | None:
    """A weight-2 codeword or None; O(length) scan over position gaps."""
    ctx = code.ctx
    for t in range(1, code.length):
        if _in_q0_star(ctx, code.positions[t]):
            word = [0] * code.length
            word[0] = 1
            word[t] = ctx.neg(ctx.inv(code.positions[t]))
            return word
    return None


def weight3_word(code: ZetterbergCode) -> list | None:
    """A weight-3 codeword or None.

    Uses the shift/scale normalization: any weight-3 word can be moved to
    support {0, u, v} with first coefficient 1, so it suffices to scan
    z = 1 + a*xi^u and ask whether -z lies in F_q0 * H away from the two
    degenerate rays through xi^0 and xi^u.
    """
    ctx = code.ctx
    sub_els = [c for c in tower.subfield_elements(ctx, "q0") if c != 0]
    for u in range(1, code.length):
        xu = code.positions[u]
        xu_inv = ctx.inv(xu)
        for a in sub_els:
            z = ctx.add(1, ctx.mul(a, xu))
            if z == 0:
                continue
            mz = ctx.neg(z)
            if not tower.in_scaled_H(ctx, mz):
                continue
            if _in_q0_star(ctx, mz) or _in_q0_star(ctx, ctx.mul(mz, xu_inv)):
                continue  # third position would collide with 0 or u
            # locate the third position and coefficient: b*xi^v = -z
            for v in range(code.ctx.q + 1):
                b = ctx.mul(mz, ctx.inv(code.h_powers[v]))
                if _in_q0_star(ctx, b):
                    if v >= code.length:  # wrap into the half range: xi^L = -1
                        v -= code.length
                        b = ctx.neg(b)
                    word = [0] * code.length
                    word[0] = 1
                    word[u] = a
                    word[v] = b
                    assert weight(word) == 3 and syndrome(code, word) == 0
                    return word
    return None


def weight4_word(code: ZetterbergCode, caps: Caps) -> list | None:
    """A weight-4 codeword or None, by exhaustive meet-in-the-middle over
    weight-2 partial sums."""
    if code.length > caps.exhaustive_len_cap:
        raise SizeCapExceeded(
            f"length {code.length} exceeds weight-4 cap {caps.exhaustive_len_cap}")
    ctx = code.ctx
    sub_els = [c for c in tower.subfield_elements(ctx, "q0") if c != 0]
    seen: dict[int, list] = {}
    for i in range(code.length):
        for j in range(i + 1, code.length):
            for ci in sub_els:
                si = ctx.mul(ci, code.positions[i])
                for cj in sub_els:
                    sig = ctx.add(si, ctx.mul(cj, code.positions[j]))
                    target = ctx.neg(sig)
                    for (k, l, ck, cl) in seen.get(target, ()):
                        if k not in (i, j) and l not in (i, j):
                            word = [0] * code.length
                            word[k], word[l] = ck, cl
                            word[i], word[j] = ci, cj
                            assert weight(word) == 4 and syndrome(code, word) == 0
                            return word
                    seen.setdefault(sig, []).append((i, j, ci, cj))
    return None


def _enumerate_min_weight(code: ZetterbergCode, caps: Caps) -> int | None:
    """Exact minimum weight by enumerating all codewords (tiny dimensions)."""
    ctx = code.ctx
    if code.dimension == 0:
        return None
    n_words = code.q0**code.dimension
    if n_words > caps.enum_codewords_cap:
        raise SizeCapExceeded(
            f"q0^dim = {n_words} exceeds enumeration cap {caps.enum_codewords_cap}")
    basis = kernel_basis(code)
    sub_els = tower.subfield_elements(ctx, "q0")
    best = None
    state = [0] * code.dimension
    while True:
        if any(state):
            word = [0] * code.length
            for bi, ci in enumerate(state):
                c = sub_els[ci]
                if c:
                    row = basis[bi]
                    word = [ctx.add(w, ctx.mul(c, r)) for w, r in zip(word, row)]
            w = weight(word)
            if best is None or w < best:
                best = w
        pos = 0
        while pos < code.dimension:
            state[pos] += 1
            if state[pos] < code.q0:
                break
            state[pos] = 0
            pos += 1
        else:
            break
    return best


def min_distance_exhaustive(code: ZetterbergCode, max_weight: int = 4,
                            caps: Caps | None = None) -> int | None:
    """Least weight of a nonzero codeword if <= max_weight, else None.

    Weight 2 and 3 use the normalized scans above, weight 4 the
    meet-in-the-middle search; higher weights fall back to full codeword
    enumeration (only feasible for tiny dimensions).
    """
    caps = caps or code.ctx.caps
    if max_weight < 2:
        return None
    if weight2_word(code) is not None:
        return 2
    if max_weight >= 3 and weight3_word(code) is not None:
        return 3
    if max_weight >= 4 and weight4_word(code, caps) is not None:
        return 4
    if max_weight >= 5:
        d = _enumerate_min_weight(code, caps)
        if d is not None and d <= max_weight:
            return d
    return None


# ---------------------------------------------------------------------------
# explicit weight-3 witnesses


def weight3_witness_even(code: ZetterbergCode) -> list:
    """The explicit weight-3 codeword for even q0 >= 4 and odd s, supported on
    the order-(q0+1) subgroup of H."""
    ctx = code.ctx
    if ctx.p != 2 or ctx.q0 < 4:
        raise PreconditionViolated("even q0 >= 4 required")
    if ctx.s % 2 == 0:
        raise PreconditionViolated("s must be odd")
    if code.variant != "full":
        raise PreconditionViolated("witness lives in the full code")
    step = (ctx.q + 1) // (ctx.q0 + 1)
    theta = ctx.pow(code.xi, step)  # generates H0 = {x : x^(q0+1) = 1}
    i, j = 1, 2
    ti, tj = ctx.pow(theta, i), ctx.pow(theta, j)
    denom = ctx.add(ti, tj)
    denom2 = ctx.mul(denom, denom)
    a = ctx.div(ctx.mul(ti, ctx.pow(ctx.add(tj, 1), 2)), denom2)
    b = ctx.div(ctx.mul(tj, ctx.pow(ctx.add(ti, 1), 2)), denom2)
    assert _in_q0_star(ctx, a) and _in_q0_star(ctx, b)
    word = [0] * code.length
    word[0] = 1
    word[i * step] = a
    word[j * step] = b
    assert weight(word) == 3 and syndrome(code, word) == 0
    return word


def weight3_witness_half_odd(code: ZetterbergCode) -> list:
    """The explicit weight-3 codeword of the half code for odd q0 >= 5, odd s.

    Built from a quartic non-square pair (c1, c2): the discriminant's square
    root lives outside F_q, the two derived elements land in H0 minus {+-1},
    and signs fold every support position into the half range.  Falls back to
    the direct weight-3 scan in the (never observed) event of a position
    collision.
    """
    ctx = code.ctx
    if ctx.p == 2 or ctx.q0 < 5:
        raise PreconditionViolated("odd q0 >= 5 required")
    if ctx.s % 2 == 0:
        raise PreconditionViolated("s must be odd")
    if code.variant != "half":
        raise PreconditionViolated("witness lives in the half code")
    c1, c2 = charsum.find_nonsquare_quartic_pair_in_context(ctx)
    sum_, diff = ctx.add(c1, c2), ctx.sub(c1, c2)
    delta = ctx.mul(ctx.mul(ctx.add(sum_, 1), ctx.sub(sum_, 1)),
                    ctx.mul(ctx.add(diff, 1), ctx.sub(diff, 1)))
    # nonsquare in F_q0, hence (s odd) nonsquare in F_q, but a square in F_{q^2}
    assert ctx.pow(delta, (ctx.q - 1) // 2) == ctx.neg(1)
    sd = ctx.field.sqrt(delta)
    c1sq, c2sq = ctx.mul(c1, c1), ctx.mul(c2, c2)
    two = ctx.encode([2 % ctx.p])
    zeta1 = ctx.div(ctx.add(ctx.sub(ctx.sub(c2sq, c1sq), 1), sd), ctx.mul(two, c1))
    zeta2 = ctx.div(ctx.sub(ctx.sub(ctx.sub(c1sq, c2sq), 1), sd), ctx.mul(two, c2))
    minus_one = ctx.neg(1)
    for z in (zeta1, zeta2):
        assert ctx.pow(z, ctx.q + 1) == 1 and z not in (1, minus_one)
    assert zeta1 != zeta2
    assert ctx.add(ctx.add(ctx.mul(c1, zeta1), ctx.mul(c2, zeta2)), 1) == 0

    def place(h: int, coef: int) -> tuple[int, int]:
        t = code._pos_index[h]
        if t >= code.length:  # xi^(t) = -xi^(t - L)
            return t - code.length, ctx.neg(coef)
        return t, coef

    terms = [(0, 1), place(zeta1, c1), place(zeta2, c2)]
    if len({t for t, _ in terms}) != 3:
        word = weight3_word(code)  # collision fallback; scan is exhaustive
        assert word is not None
        return word
    word = [0] * code.length
    for t, c in terms:
        word[t] = c
    assert weight(word) == 3 and syndrome(code, word) == 0
    return word
