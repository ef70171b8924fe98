from itertools import combinations
from math import comb

import pytest

from lisperm.bijections import (
    BijectionError,
    OrderMap,
    ValueSubset,
    c_to_d,
    d_to_c,
    e_chain,
    enumerate_Crsk_nks,
    order_map_apply,
    order_map_invert,
    recurrence_merge,
    recurrence_split,
    setie_rhs,
)
from lisperm.permcore import enumerate_Pi
from lisperm.qpoly import imaj_gf, stat_gf
from lisperm.tableau import (
    StandardTableau,
    TableauPair,
    enumerate_Crsk,
    enumerate_D,
    enumerate_Pirsk,
    tableau_maj,
)

ST = StandardTableau


def grid(max_n, min_n=2):
    for n in range(min_n, max_n + 1):
        for k in range(n // 2 + 1):
            yield n, k


def test_order_map_examples():
    f = OrderMap([3], [4])
    assert order_map_apply(f, 3) == 4
    assert order_map_apply(OrderMap([5, 7, 8], [6, 7, 8]), 7) == 7
    assert order_map_apply(order_map_invert(f), 4) == 3
    with pytest.raises(ValueError):
        f(5)
    with pytest.raises(ValueError):
        OrderMap([1, 2], [3])


def test_split_and_merge_examples():
    pair = TableauPair(ST([[1, 2, 3], [4]]), ST([[1, 2, 4], [3]]))
    out, b = recurrence_split(pair, 2)
    assert out.Q == ST([[1, 2, 3], [4]]) and b.values == (4,)
    assert out.P == pair.P
    assert recurrence_merge(out, b, 2) == pair

    s0 = TableauPair(ST([[1, 3], [2]]), ST([[1, 2], [3]]))
    out, b = recurrence_split(s0, 1)
    assert out == s0 and b.values == ()
    assert recurrence_merge(s0, (), 1) == s0

    full = TableauPair(ST([[1, 2, 3, 4]]), ST([[1, 2, 3, 4]]))
    assert recurrence_split(full, 0) == (full, ValueSubset(()))


def test_d_to_c_examples():
    pair = TableauPair(ST([[1, 2, 3], [4]]), ST([[1, 2, 4], [3]]))
    out, a = d_to_c(pair, 2, 1)
    assert out.Q == ST([[1, 2, 3], [4]]) and a.values == (4,)
    assert c_to_d(out, a, 2).Q.rows == ((1, 2, 4), (3,))
    same, empty = d_to_c(pair, 2, 0)
    assert same == pair and empty.values == ()


def test_regime_refusals():
    pair = TableauPair(ST([[1, 2], [3]]), ST([[1, 2], [3]]))
    with pytest.raises(BijectionError):
        d_to_c(pair, 2, 1)
    with pytest.raises(BijectionError):
        recurrence_merge(pair, (3,), 2)
    with pytest.raises(BijectionError):
        c_to_d(pair, (3,), 2)
    with pytest.raises(BijectionError):
        recurrence_split(TableauPair(ST([[1, 2], [3]]), ST([[1, 3], [2]])), 0)


def test_merge_rejects_subset_outside_window():
    pair = TableauPair(ST([[1, 2, 3], [4]]), ST([[1, 2, 3], [4]]))
    with pytest.raises(BijectionError):
        recurrence_merge(pair, (2,), 2)


def test_recurrence_bijection_round_trips_exhaustive():
    for n, k in grid(6):
        for s in range(k + 1):
            domain = list(enumerate_Crsk_nks(n, k, s))
            images = set()
            for pair in domain:
                out, b = recurrence_split(pair, k)
                assert out.P == pair.P
                assert out.Q.rows[0] == tuple(range(1, n - k + s + 1))
                assert recurrence_merge(out, b, k) == pair
                images.add((out, b))
            target = {
                (pair, ValueSubset(b))
                for pair in enumerate_Pirsk(n, k - s)
                for b in combinations(range(n - k + 1, n + 1), s)
            }
            assert images == target, (n, k, s)
            for pair, b in target:
                assert recurrence_split(recurrence_merge(pair, b, k), k) == (pair, b)


def test_d_to_c_round_trips_exhaustive():
    for n, k in grid(6):
        for s in range(k + 1):
            images = set()
            for pair in enumerate_D(n, k, s):
                out, a = d_to_c(pair, k, s)
                assert out.P == pair.P
                assert c_to_d(out, a, k) == pair
                images.add((out, a))
            target = {
                (pair, ValueSubset(a))
                for pair in enumerate_Crsk(n, k - s)
                for a in combinations(range(n - k + 1, n + 1), s)
            }
            assert images == target, (n, k, s)
            for pair, a in target:
                assert d_to_c(c_to_d(pair, a, k), k, s) == (pair, a)


def test_crsk_partition_by_first_row_length():
    for n, k in grid(8):
        whole = set(enumerate_Crsk(n, k))
        parts = [set(enumerate_Crsk_nks(n, k, s)) for s in range(k + 1)]
        assert set().union(*parts) == whole
        assert sum(map(len, parts)) == len(whole)
        for s, part in enumerate(parts):
            assert len(part) == comb(k, s) * sum(1 for _ in enumerate_Pi(n, k - s))


def test_corollary_maj_over_crsk_nks():
    for n, k in grid(7):
        for s in range(k + 1):
            lhs = stat_gf(tableau_maj(p.P) for p in enumerate_Crsk_nks(n, k, s))
            assert lhs == comb(k, s) * imaj_gf(enumerate_Pi(n, k - s))


def test_e_chain_example_4_2():
    chain = e_chain(4, 2)
    assert [len(e) for e in chain] == [7, 1, 0]
    assert len(list(enumerate_Crsk(4, 2))) == 12
    assert len(list(enumerate_D(4, 2, 1))) == 8
    assert 12 - 8 + 1 == len(list(enumerate_Pirsk(4, 2))) == 5


def test_e_chain_degenerate_k():
    for n in range(1, 7):
        assert e_chain(n, 0) == [set()]
        assert set(enumerate_Crsk(n, 0)) == set(enumerate_Pirsk(n, 0))
    chain = e_chain(4, 1)
    assert chain[1] == set()
    assert len(list(enumerate_Crsk(4, 1))) - len(chain[0]) == 3


def test_setie_small_grid():
    for n, k in grid(7):
        e_chain(n, k)
        assert setie_rhs(n, k) == set(enumerate_Pirsk(n, k)), (n, k)
