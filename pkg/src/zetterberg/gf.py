"""Finite field arena.

All algebra happens inside one ambient field F_{p^n} with n = 2*s*m,
q0 = p^m, q = q0^s.  The subfields F_q0, F_q and the norm-one subgroup H of
order q+1 are realized as exponent-indexed subsets of the ambient
multiplicative group; no embedding maps are ever needed.

Field elements are plain integers: the code of an element with coefficient
vector (c_0, ..., c_{k-1}) in the polynomial basis is sum(c_i * p**i).
Arithmetic is exposed as methods of Field / FieldContext acting on codes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .caps import DEFAULT_CAPS, Caps
from .errors import SizeCapExceeded

# ---------------------------------------------------------------------------
# integer helpers


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (valid far beyond the caps used here)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # cycle-finding with retry over polynomial offsets; n must be composite
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Sorted (prime, exponent) factorization; trial division then rho."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    factors: dict[int, int] = {}

    def _add(p, e=1):
        factors[p] = factors.get(p, 0) + e

    for p in (2, 3, 5):
        while n % p == 0:
            _add(p)
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < 10**6:
        while n % d == 0:
            _add(d)
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        n = stack.pop()
        if n == 1:
            continue
        if is_prime(n):
            _add(n)
            continue
        d = _pollard_rho(n)
        stack.extend((d, n // d))
    return sorted(factors.items())


def prime_power_split(q: int) -> tuple[int, int]:
    """q = p**m with p prime, else ValueError."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


# ---------------------------------------------------------------------------
# dense polynomials over F_p (ascending-degree coefficient tuples)


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mulmod(a, b, f, p):
    # a*b mod f, f monic
    n = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, n - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(n):
                prod[d - n + j] = (prod[d - n + j] - c * f[j]) % p
    return _poly_trim(prod)


def _poly_powmod(a, e, f, p):
    result = (1,)
    base = a
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b
        inv_lead = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv_lead % p
            off = len(a) - len(b)
            for j in range(len(b)):
                a[off + j] = (a[off + j] - c * b[j]) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if a:  # normalize monic
        inv_lead = pow(a[-1], p - 2, p)
        a = [c * inv_lead % p for c in a]
    return _poly_trim(a)


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Deterministic test: X^(p^n) == X mod f and gcd(X^(p^(n/r)) - X, f) = 1."""
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False  # divisible by X
    x = (0, 1)
    # checkpoints n/r for primes r | n, ascending, so cheap factors exit early
    checkpoints = sorted({n // r for r, _ in factorize(n)})
    t = x
    i = 0
    for cp in checkpoints:
        while i < cp:
            t = _poly_powmod(t, p, f, p)
            i += 1
        g = list(t)
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p  # t - X
        if _poly_gcd(_poly_trim(g), f, p) != (1,):
            return False
    while i < n:
        t = _poly_powmod(t, p, f, p)
        i += 1
    return t == x


def find_irreducible(p: int, n: int, skip: int = 0) -> tuple[int, ...]:
    """The (skip+1)-th monic irreducible of degree n over F_p.

    Candidates are ordered lexicographically by the ascending-degree
    coefficient tuple (c0, c1, ..., c_{n-1}), so the result is deterministic
    across runs and platforms.  skip > 0 yields alternate moduli for
    representation-independence checks.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 1:
        raise ValueError("degree must be >= 1")
    remaining = skip
    # z < p^(n-1) means constant term 0, reducible for n >= 2
    start = 0 if n == 1 else p ** (n - 1)
    for z in range(start, p**n):
        # big-endian digits of z give (c0, ..., c_{n-1})
        digits = []
        zz = z
        for _ in range(n):
            digits.append(zz % p)
            zz //= p
        digits.reverse()
        f = tuple(digits) + (1,)
        if _is_irreducible(f, p):
            if remaining == 0:
                return f
            remaining -= 1
    raise ArithmeticError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# scalar field arithmetic on integer codes


class Field:
    """F_{p^k} with elements as radix-p integer codes.

    Immutable after construction; all operations are pure functions of codes.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = find_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible(modulus, p):
            raise ValueError("modulus is not irreducible")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus
        self._pk = [p**i for i in range(k + 1)]
        if p == 2:
            # full modulus bit pattern, including the X^k term
            self._mod2 = sum(c << i for i, c in enumerate(modulus))
        else:
            # reduction rows: digits of X^(k+j) mod f for j = 0..k-2
            rows = []
            cur = [(-c) % p for c in modulus[:k]]  # X^k mod f
            rows.append(tuple(cur))
            for _ in range(k - 2):
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    for i in range(k):
                        cur[i] = (cur[i] - top * modulus[i]) % p
                rows.append(tuple(cur))
            self._red = rows

    # -- representation

    def decode(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (ascending degree) of a code."""
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return tuple(out)

    def encode(self, coeffs) -> int:
        p = self.p
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        a = 0
        for c in reversed([int(c) % p for c in coeffs]):
            a = a * p + c
        return a

    def elements(self):
        return range(self.order)

    # -- arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.k):
            out += (a % p + b % p) % p * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.k):
            out += (-(a % p)) % p * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            r = 0
            k = self.k
            mod2 = self._mod2
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> k) & 1:
                    a ^= mod2
            return r
        p, k = self.p, self.k
        da = self.decode(a)
        db = self.decode(b)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] += ai * bj
        out = [c % p for c in prod[:k]]
        for j in range(k - 1):
            c = prod[k + j] % p
            if c:
                row = self._red[j]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        return self.encode(out)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    @property
    def one(self) -> int:
        return 1

    @property
    def minus_one(self) -> int:
        return self.neg(1)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- tower maps relative to a subfield F_{p^d}, d | k

    def trace_to(self, a: int, d: int) -> int:
        if self.k % d:
            raise ValueError("subfield degree must divide k")
        step = self.p**d
        t = 0
        x = a
        for _ in range(self.k // d):
            t = self.add(t, x)
            x = self.pow(x, step)
        return t

    def norm_to(self, a: int, d: int) -> int:
        if self.k % d:
            raise ValueError("subfield degree must divide k")
        step = self.p**d
        t = 1
        x = a
        for _ in range(self.k // d):
            t = self.mul(t, x)
            x = self.pow(x, step)
        return t

    # -- multiplicative structure

    @cached_property
    def order_factorization(self) -> list[tuple[int, int]]:
        return factorize(self.order - 1)

    @cached_property
    def generator(self) -> int:
        """First code (ascending) generating the full multiplicative group."""
        n1 = self.order - 1
        cofactors = [n1 // r for r, _ in self.order_factorization]
        for z in range(1, self.order):
            if all(self.pow(z, c) != 1 for c in cofactors):
                return z
        raise ArithmeticError("no generator found")  # unreachable

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        o = self.order - 1
        for r, e in self.order_factorization:
            for _ in range(e):
                if self.pow(a, o // r) == 1:
                    o //= r
                else:
                    break
        return o

    def subfield_elements(self, d: int) -> list[int]:
        """Sorted codes of the subfield of order p^d (d | k)."""
        if self.k % d:
            raise ValueError("subfield degree must divide k")
        sub_order = self.p**d
        if sub_order == self.order:
            return list(range(self.order))
        e = (self.order - 1) // (sub_order - 1)
        gamma = self.pow(self.generator, e)
        els = [0, 1]
        x = gamma
        while x != 1:
            els.append(x)
            x = self.mul(x, gamma)
        if len(els) != sub_order:
            raise ArithmeticError("subfield enumeration failed")
        return sorted(els)

    def sqrt(self, a: int) -> int:
        """A square root in odd characteristic (Tonelli-Shanks); raises if none."""
        if self.p == 2:
            # squaring is the Frobenius, its inverse is x -> x^(2^(k-1))
            return self.pow(a, self.order // 2)
        if a == 0:
            return 0
        n1 = self.order - 1
        if self.pow(a, n1 // 2) != 1:
            raise ValueError("element is not a square")
        s, m = n1, 0
        while s % 2 == 0:
            s //= 2
            m += 1
        z = self.pow(self.generator, s)  # order 2^m
        x = self.pow(a, (s + 1) // 2)
        b = self.pow(a, s)
        while b != 1:
            t, k = b, 0
            while t != 1:
                t = self.mul(t, t)
                k += 1
            z2 = z
            for _ in range(m - k - 1):
                z2 = self.mul(z2, z2)
            x = self.mul(x, z2)
            b = self.mul(b, self.mul(z2, z2))
            m = k
        return x

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k})"


# ---------------------------------------------------------------------------
# the ambient tower context


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    s: int
    n: int
    modulus: tuple[int, ...]


class FieldContext:
    """F_{p^(2sm)} together with handles to F_q0, F_q and H.

    q0 = p^m, q = q0^s.  The fixed generator g of the ambient multiplicative
    group pins down every subgroup: H = <g^(q-1)> (order q+1),
    F_q^* = <g^(q+1)> (order q-1), F_q0^* = <g^((q^2-1)/(q0-1))>.
    Immutable after construction; safe to share across threads.
    """

    def __init__(self, p: int, m: int, s: int, caps: Caps = DEFAULT_CAPS,
                 modulus_skip: int = 0):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if m < 1 or s < 1:
            raise ValueError("m and s must be >= 1")
        n = 2 * s * m
        order = p**n
        if order > caps.max_ambient_order:
            raise SizeCapExceeded(
                f"ambient order p^(2sm) = {order} exceeds cap {caps.max_ambient_order}")
        self.p = p
        self.m = m
        self.s = s
        self.n = n
        self.q0 = p**m
        self.q = self.q0**s
        self.order = order
        self.caps = caps
        self.field = Field(p, n, find_irreducible(p, n, skip=modulus_skip))
        self.spec = FieldSpec(p, m, s, n, self.field.modulus)
        self.g = self.field.generator
        self.factorization = self.field.order_factorization
        q, q0 = self.q, self.q0
        self.subgroup_exponents = {
            "H": q - 1,
            "Fq_star": q + 1,
            "Fq0_star": (q * q - 1) // (q0 - 1),
        }
        self.xi = self.field.pow(self.g, q - 1)

    def subgroup_order(self, tag: str) -> int:
        return (self.order - 1) // self.subgroup_exponents[tag]

    # arithmetic passthroughs, so most callers only carry the context
    def add(self, a, b):
        return self.field.add(a, b)

    def sub(self, a, b):
        return self.field.sub(a, b)

    def neg(self, a):
        return self.field.neg(a)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def inv(self, a):
        return self.field.inv(a)

    def div(self, a, b):
        return self.field.div(a, b)

    def pow(self, a, e):
        return self.field.pow(a, e)

    def decode(self, a):
        return self.field.decode(a)

    def encode(self, coeffs):
        return self.field.encode(coeffs)

    def frobenius(self, a: int, level: str) -> int:
        """a^q0 or a^q; conjugate(x) = frobenius(x, 'q')."""
        if level == "q0":
            return self.field.pow(a, self.q0)
        if level == "q":
            return self.field.pow(a, self.q)
        raise ValueError("level must be 'q0' or 'q'")

    def conjugate(self, a: int) -> int:
        return self.field.pow(a, self.q)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "s": self.s,
            "modulus": list(self.field.modulus),
            "generator": list(self.field.decode(self.g)),
        }

    def __repr__(self):
        return f"FieldContext(p={self.p}, m={self.m}, s={self.s}, order={self.order})"


@lru_cache(maxsize=64)
def _cached_context(p: int, m: int, s: int, caps: Caps, modulus_skip: int) -> FieldContext:
    return FieldContext(p, m, s, caps=caps, modulus_skip=modulus_skip)


def make_field(p: int, m: int, s: int, caps: Caps = DEFAULT_CAPS,
               modulus_skip: int = 0) -> FieldContext:
    """Build the ambient context for (q0, s) with q0 = p^m.

    Contexts are immutable, so identical parameter sets share one instance.
    """
    return _cached_context(p, m, s, caps, modulus_skip)


def make_field_for_q0(q0: int, s: int, caps: Caps = DEFAULT_CAPS,
                      modulus_skip: int = 0) -> FieldContext:
    p, m = prime_power_split(q0)
    return FieldContext(p, m, s, caps=caps, modulus_skip=modulus_skip)


def context_to_json_str(ctx: FieldContext) -> str:
    return json.dumps(ctx.to_json(), sort_keys=True)
