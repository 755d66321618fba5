"""Vectorized kernels (numpy) for the syndrome BFS and criterion scans.

Everything here reproduces the scalar Field semantics exactly; numpy is used
only to process many field elements per call.  Element codes travel as int64
arrays; digit matrices use exact small-integer arithmetic (float64 matmuls
stay far below 2^53, so they are exact too).
"""

from __future__ import annotations

import numpy as np

from .gf import Field


class BulkField:
    """Array-at-a-time companion of a scalar Field."""

    def __init__(self, F: Field):
        self.F = F
        self.p = F.p
        self.k = F.k
        self.order = F.order
        self._pk = np.array([F.p**i for i in range(F.k)], dtype=np.int64)

    # -- digit representation (odd characteristic)

    def decode(self, codes: np.ndarray) -> np.ndarray:
        out = np.empty((codes.shape[0], self.k), dtype=np.int64)
        c = codes.astype(np.int64, copy=True)
        for i in range(self.k):
            out[:, i] = c % self.p
            c //= self.p
        return out

    def encode(self, digits: np.ndarray) -> np.ndarray:
        return (digits % self.p) @ self._pk

    # -- elementwise field ops against a constant

    def add_const(self, codes: np.ndarray, c: int) -> np.ndarray:
        if self.p == 2:
            return codes ^ c
        d = self.decode(codes)
        d += np.array(self.F.decode(c), dtype=np.int64)
        return self.encode(d)

    def sub_const(self, codes: np.ndarray, c: int) -> np.ndarray:
        if self.p == 2:
            return codes ^ c
        return self.add_const(codes, self.F.neg(c))

    def mul_const(self, codes: np.ndarray, c: int) -> np.ndarray:
        if self.p == 2:
            res = np.zeros_like(codes)
            cur = codes.copy()
            k, mod2 = self.k, self.F._mod2
            cc = c
            while cc:
                if cc & 1:
                    res ^= cur
                cc >>= 1
                if cc:
                    cur = cur << 1
                    overflow = (cur >> k) & 1
                    cur ^= overflow * mod2
            return res
        # multiplication by a constant is F_p-linear: one k x k digit matrix
        rows = [self.F.decode(self.F.mul(c, int(self._pk[i]))) for i in range(self.k)]
        M = np.array(rows, dtype=np.float64)
        d = self.decode(codes).astype(np.float64)
        prod = np.rint(d @ M).astype(np.int64)
        return self.encode(prod)

    # -- group enumeration and character tables

    def build_exp(self) -> np.ndarray:
        """exp[j] = code of g^j for 0 <= j < order-1, by doubling."""
        n1 = self.order - 1
        exp = np.empty(n1, dtype=np.int64)
        exp[0] = 1
        filled = 1
        while filled < n1:
            c = self.F.pow(self.F.generator, filled)
            span = min(filled, n1 - filled)
            exp[filled:filled + span] = self.mul_const(exp[:span], c)
            filled += span
        return exp

    def build_chi_table(self, exp: np.ndarray) -> np.ndarray:
        """chi[code] in {-1, 0, +1} for the quadratic character (odd p)."""
        if self.p == 2:
            raise ValueError("quadratic character needs odd characteristic")
        chi = np.full(self.order, -1, dtype=np.int8)
        chi[exp[0::2]] = 1
        chi[0] = 0
        return chi

    def build_log_table(self, exp: np.ndarray) -> np.ndarray:
        log = np.zeros(self.order, dtype=np.int64)
        log[exp] = np.arange(self.order - 1, dtype=np.int64)
        return log

    def build_trace_table_char2(self, sub_degree: int) -> np.ndarray:
        """trace[code] = code of Tr to the subfield F_{2^sub_degree} (char 2).

        The trace is F_2-linear, so the table doubles up over basis bits.
        """
        if self.p != 2:
            raise ValueError("char-2 trace table requested for odd field")
        tr = np.zeros(self.order, dtype=np.int64)
        for i in range(self.k):
            t = self.F.trace_to(1 << i, sub_degree)
            lo, hi = 1 << i, 1 << (i + 1)
            tr[lo:hi] = tr[:lo] ^ t
        return tr


# ---------------------------------------------------------------------------
# breadth-first layering of a(n additive) Cayley graph


def covering_layers(bf: BulkField, steps) -> np.ndarray:
    """layer[v] = least number of terms from `steps` summing to v.

    Plain BFS over the additive group, with direction-optimized expansion
    (top-down from small frontiers, bottom-up into small unvisited sets);
    both directions assign identical layers because the step set is
    symmetric (verified here).
    """
    F = bf.F
    step_list = sorted(set(int(s) for s in steps))
    if any(F.neg(s) not in set(step_list) for s in step_list):
        raise ValueError("step set must be symmetric under negation")
    order = bf.order
    layer = np.full(order, 0xFF, dtype=np.uint8)
    layer[0] = 0
    frontier = np.array(step_list, dtype=np.int64)
    layer[frontier] = 1
    level = 1
    unassigned = order - 1 - frontier.size
    while unassigned > 0:
        level += 1
        if level >= 0xFF:
            raise ArithmeticError("BFS exceeded representable depth")
        if frontier.size <= unassigned // 4:
            # top-down: push each frontier element through every step
            pieces = []
            for c in step_list:
                cand = bf.add_const(frontier, c)
                fresh = cand[layer[cand] == 0xFF]
                if fresh.size:
                    layer[fresh] = level
                    pieces.append(fresh)
            new = np.unique(np.concatenate(pieces)) if pieces else np.empty(0, np.int64)
        else:
            # bottom-up: each unvisited element looks for a visited in-neighbor
            remaining = np.flatnonzero(layer == 0xFF).astype(np.int64)
            pieces = []
            for c in step_list:
                if remaining.size == 0:
                    break
                prev = bf.sub_const(remaining, c)
                hit = layer[prev] != 0xFF
                found = remaining[hit]
                if found.size:
                    layer[found] = level
                    pieces.append(found)
                    remaining = remaining[~hit]
            new = np.concatenate(pieces) if pieces else np.empty(0, np.int64)
        if new.size == 0:
            raise ArithmeticError("step set does not generate the group")
        unassigned -= new.size
        frontier = new
    return layer
