import random

import numpy as np
import pytest

from zetterberg._bulk import BulkField, covering_layers
from zetterberg.gf import Field


@pytest.mark.parametrize("p,k", [(2, 6), (2, 11), (3, 4), (5, 3), (29, 2), (7, 2)])
def test_bulk_ops_match_scalar(p, k):
    F = Field(p, k)
    bf = BulkField(F)
    rng = random.Random(p * 100 + k)
    codes = np.array([rng.randrange(F.order) for _ in range(200)], dtype=np.int64)
    assert (bf.encode(bf.decode(codes)) == codes).all()
    for _ in range(5):
        c = rng.randrange(F.order)
        added = bf.add_const(codes, c)
        subbed = bf.sub_const(codes, c)
        mulled = bf.mul_const(codes, c)
        for i in range(0, 200, 17):
            a = int(codes[i])
            assert int(added[i]) == F.add(a, c)
            assert int(subbed[i]) == F.sub(a, c)
            assert int(mulled[i]) == F.mul(a, c)


def test_exp_chi_log_tables_match_scalar():
    for p, k in [(3, 4), (2, 8), (5, 2)]:
        F = Field(p, k)
        bf = BulkField(F)
        exp = bf.build_exp()
        x = 1
        for j in range(F.order - 1):
            assert int(exp[j]) == x
            x = F.mul(x, F.generator)
        log = bf.build_log_table(exp)
        for j in range(0, F.order - 1, 7):
            assert log[exp[j]] == j
        if p != 2:
            chi = bf.build_chi_table(exp)
            assert chi[0] == 0
            half = (F.order - 1) // 2
            assert int((chi == 1).sum()) == half == int((chi == -1).sum())


def test_trace_table_char2_matches_scalar():
    F = Field(2, 8)
    bf = BulkField(F)
    for d in (1, 2, 4):
        tr = bf.build_trace_table_char2(d)
        for v in range(0, 256, 3):
            assert int(tr[v]) == F.trace_to(v, d)


def test_covering_layers_rejects_asymmetric_steps():
    F = Field(3, 2)
    bf = BulkField(F)
    with pytest.raises(ValueError):
        covering_layers(bf, [1])  # -1 missing


def test_covering_layers_tiny_group():
    # steps {1, -1} over F_9: layer = least number of +-1 terms, i.e. the
    # "distance to zero" along the prime-subfield line, plus the rest
    F = Field(3, 1)
    bf = BulkField(F)
    layer = covering_layers(bf, [1, F.neg(1)])
    assert layer[0] == 0 and layer[1] == 1 and layer[2] == 1
