import pytest

from bruteforce import sym_hollow_tables_brute
from lrtables.contingency import PartitionMatrix
from lrtables.errors import DimensionMismatch, NotSymmetric, OutsideStableRange
from lrtables.oracle import oracle_osp_invariants
from lrtables.orthosymplectic import (
    SymMarginSpec,
    enumerate_sym_lrct,
    o_invariant_dim,
    osp_invariant_dim,
    sp_invariant_dim,
    sym_table_norm,
)
from lrtables.partition import EMPTY, Partition, partitions
from lrtables.tables import TableSpec, count_tables, fpf_involution_count

ONE = Partition((1,))


def test_sym_margin_spec():
    m = SymMarginSpec([(2, 1), (1,)], 6)
    assert m.stable_threshold() == 6 and m.in_stable_range()
    assert not m.with_rank(5).in_stable_range()


def test_stable_range_implies_o_n_label_condition():
    # mu'(1) + mu'(2) <= n for every label once n >= 2 * sum l(mu_i)
    pool = [p for s in range(7) for p in partitions(s)]
    for mu in pool:
        m = SymMarginSpec([mu], max(1, 2 * len(mu)))
        conj = mu.conjugate()
        assert sum(conj[:2]) <= m.n


def test_sym_table_norm_examples():
    t = PartitionMatrix(((EMPTY, ONE), (ONE, EMPTY)))
    assert sym_table_norm(t, SymMarginSpec([(1,), (1,)], 4)) == 1
    assert sym_table_norm(PartitionMatrix.empty(2), SymMarginSpec([(1,), (1,)], 4)) == 0
    assert sym_table_norm(PartitionMatrix.empty(2), SymMarginSpec([(), ()], 1)) == 1


def test_sym_table_norm_errors():
    lopsided = PartitionMatrix(((EMPTY, ONE), (EMPTY, EMPTY)))
    with pytest.raises(NotSymmetric):
        sym_table_norm(lopsided, SymMarginSpec([(1,), (1,)], 4))
    with pytest.raises(DimensionMismatch):
        sym_table_norm(PartitionMatrix.empty(3), SymMarginSpec([(1,), (1,)], 4))


@pytest.mark.parametrize("r, expected", [(4, 3), (3, 0)])
def test_vector_rep_examples(r, expected):
    m = SymMarginSpec([(1,)] * r, 2 * r)
    assert osp_invariant_dim(m) == expected
    assert o_invariant_dim(m) == sp_invariant_dim(m) == expected


def test_adjoint_example_r3():
    m = SymMarginSpec([(2,)] * 3, 12)
    expected = count_tables(TableSpec((2, 2, 2), (2, 2, 2), hollow=True, symmetric=True))
    assert expected == len(sym_hollow_tables_brute((2, 2, 2))) == 1
    assert osp_invariant_dim(m) == expected


def test_refuses_below_stable_range():
    with pytest.raises(OutsideStableRange) as exc:
        osp_invariant_dim(SymMarginSpec([(1,)] * 3, 5), group="sp")
    assert exc.value.threshold == 6
    assert "Sp_2n" in str(exc.value)
    with pytest.raises(ValueError):
        osp_invariant_dim(SymMarginSpec([(1,)] * 2, 4), group="gl")


def test_enumerated_tables_are_hollow_symmetric_and_row_feasible():
    pool = [p for s in range(4) for p in partitions(s)]
    import random

    rng = random.Random(3)
    for _ in range(60):
        mus = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
        m = SymMarginSpec(mus, max(1, 2 * sum(map(len, mus))))
        for table, norm in enumerate_sym_lrct(m):
            assert table.hollow() and table.symmetric()
            assert norm == sym_table_norm(table, m) > 0
            for i, mu in enumerate(m.partitions):
                assert sum(map(sum, table.row(i))) == sum(mu)


def test_vector_rep_matches_involutions():
    for r in range(1, 9):
        assert osp_invariant_dim(SymMarginSpec([(1,)] * r, 2 * r)) == fpf_involution_count(r)


def test_adjoint_matches_symmetric_tables():
    for r in range(1, 7):
        twos = (2,) * r
        expected = count_tables(TableSpec(twos, twos, hollow=True, symmetric=True))
        assert osp_invariant_dim(SymMarginSpec([(2,)] * r, 2 * r)) == expected


def test_so_adjoint_label_gives_same_counts():
    # E^(1,1) restricts to the adjoint of SO_n; its invariants match (2)^r
    for r in range(1, 5):
        a = osp_invariant_dim(SymMarginSpec([(1, 1)] * r, 4 * r))
        b = oracle_osp_invariants(SymMarginSpec([(1, 1)] * r, 4 * r))
        assert a == b == osp_invariant_dim(SymMarginSpec([(2,)] * r, 2 * r))


def test_permutation_invariance():
    import random

    rng = random.Random(5)
    pool = [p for s in range(4) for p in partitions(s)]
    for _ in range(50):
        mus = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        m = SymMarginSpec(mus, max(1, 2 * sum(map(len, mus))))
        order = list(range(m.r))
        rng.shuffle(order)
        assert osp_invariant_dim(m.permuted(order)) == osp_invariant_dim(m)


def test_oracle_equivalence_small():
    pool = [p for s in range(3) for p in partitions(s)]
    import itertools

    for mus in itertools.product(pool, repeat=3):
        m = SymMarginSpec(mus, max(1, 2 * sum(map(len, mus))))
        assert osp_invariant_dim(m) == oracle_osp_invariants(m)
