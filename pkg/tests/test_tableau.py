import random
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lisperm.permcore import (
    Permutation,
    descent_set,
    enumerate_C,
    enumerate_Pi,
    enumerate_Sn,
    idescent_set,
    inverse,
    lis_length,
)
from lisperm.tableau import (
    QuasiTableau,
    StandardTableau,
    Tableau,
    TableauPair,
    enumerate_Crsk,
    enumerate_D,
    enumerate_Pirsk,
    enumerate_syt,
    partitions,
    quasi_pattern_problem,
    row_insert,
    rsk,
    rsk_inverse,
    tableau_descent_set,
    tableau_from_json,
    tableau_maj,
)

P = Permutation.parse
ST = StandardTableau


def hook_count(shape):
    n = sum(shape)
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    hooks = prod(shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i]))
    return factorial(n) // hooks


def test_row_insert_examples():
    assert row_insert([[1, 2]], 4) == (((1, 2, 4),), 1)
    assert row_insert([[1, 2, 4]], 3) == (((1, 2, 3), (4,)), 2)
    assert row_insert([], 1) == (((1,),), 1)
    with pytest.raises(ValueError):
        row_insert(ST([[1, 2]]), 2)


def test_rsk_examples():
    for n in range(1, 7):
        pair = rsk(Permutation.identity(n))
        assert pair.P.rows == pair.Q.rows == (tuple(range(1, n + 1)),)
    assert rsk(P("21")) == TableauPair(ST([[1], [2]]), ST([[1], [2]]))
    assert rsk(P("1243")) == TableauPair(ST([[1, 2, 3], [4]]), ST([[1, 2, 3], [4]]))


def test_rsk_inverse_examples():
    ident = TableauPair(ST([[1, 2, 3, 4, 5]]), ST([[1, 2, 3, 4, 5]]))
    assert rsk_inverse(ident) == Permutation.identity(5)
    assert str(rsk_inverse(TableauPair(ST([[1, 2, 3], [4]]), ST([[1, 2, 3], [4]])))) == "1243"
    pair = TableauPair(ST([[1, 3], [2, 4]]), ST([[1, 2], [3, 4]]))
    assert rsk(rsk_inverse(pair)) == pair


def test_rsk_inverse_rejects_nonstandard_or_mismatched():
    with pytest.raises(ValueError):
        rsk_inverse(TableauPair(ST([[1, 2], [3]]), Tableau([[2, 1], [3]])))
    with pytest.raises(ValueError):
        TableauPair(ST([[1, 2, 3]]), ST([[1, 2], [3]]))


@pytest.mark.parametrize(
    "rows, expected", [([[1, 2, 3, 4]], set()), ([[1, 2, 3], [4]], {3}), ([[1, 3], [2, 4]], {1, 3})]
)
def test_tableau_descent_examples(rows, expected):
    assert tableau_descent_set(ST(rows)) == expected
    assert tableau_maj(ST(rows)) == sum(expected)


def test_enumerate_syt_examples():
    assert len(list(enumerate_syt((5,)))) == 1
    assert len(list(enumerate_syt((2, 2)))) == 2
    assert len(list(enumerate_syt((2, 1)))) == 2


def test_enumerate_syt_matches_hook_length_formula():
    for n in range(1, 9):
        total = 0
        for shape in partitions(n):
            syts = list(enumerate_syt(shape))
            assert len(syts) == len(set(syts)) == hook_count(shape)
            assert all(t.is_standard() and t.shape == shape for t in syts)
            total += len(syts) ** 2
        assert total == factorial(n)


def test_rsk_properties_exhaustive():
    for n in range(1, 8):
        for w in enumerate_Sn(n):
            pair = rsk(w)
            assert rsk_inverse(pair) == w
            assert len(pair.P.rows[0]) == lis_length(w)
            swapped = rsk(inverse(w))
            assert (swapped.P, swapped.Q) == (pair.Q, pair.P)
            assert tableau_descent_set(pair.P) == idescent_set(w)
            assert tableau_descent_set(pair.Q) == descent_set(w)


def test_rsk_random_round_trips_large():
    rng = random.Random(20261015)
    for _ in range(1000):
        word = list(range(1, 51))
        rng.shuffle(word)
        w = Permutation(tuple(word))
        assert rsk_inverse(rsk(w)) == w


@settings(max_examples=200)
@given(st.integers(1, 40).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_rsk_round_trip_property(word):
    w = Permutation(tuple(word))
    assert rsk_inverse(rsk(w)) == w


def test_crsk_two_routes_agree():
    for n in range(1, 8):
        for s in range(n + 1):
            direct = set(enumerate_Crsk(n, s))
            image = {rsk(w) for w in enumerate_C(n, s)}
            assert direct == image, (n, s)


def test_pirsk_is_rsk_image_of_pi():
    for n in range(1, 8):
        for k in range(n + 1):
            assert set(enumerate_Pirsk(n, k)) == {rsk(w) for w in enumerate_Pi(n, k)}
    assert len(list(enumerate_Pirsk(4, 2))) == 5


def quasi_oracle(n, k, s):
    """Every way to write 1..n into each shape, filtered by the quasi pattern."""
    out = set()
    for shape in partitions(n):
        syts = list(enumerate_syt(shape))
        for word in permutations(range(1, n + 1)):
            rows, i = [], 0
            for r in shape:
                rows.append(tuple(word[i : i + r]))
                i += r
            if quasi_pattern_problem(tuple(rows), k, s) is None:
                out.update(TableauPair(Pt, Tableau(rows)) for Pt in syts)
    return out


def test_enumerate_D_against_brute_force():
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            for s in range(k + 1):
                direct = list(enumerate_D(n, k, s))
                assert len(direct) == len(set(direct))
                assert set(direct) == quasi_oracle(n, k, s), (n, k, s)


def test_enumerate_D_examples():
    assert len(list(enumerate_D(4, 2, 1))) == 8
    assert len(list(enumerate_D(4, 2, 2))) == 1
    for n in range(2, 8):
        for k in range(n // 2 + 1):
            assert set(enumerate_D(n, k, 0)) == set(enumerate_Crsk(n, k))


def test_D_regime_is_enforced():
    with pytest.raises(ValueError):
        next(enumerate_D(5, 3, 1))
    with pytest.raises(ValueError):
        next(enumerate_D(6, 2, 3))


def test_quasi_second_row_bounded_by_k():
    for n in range(2, 8):
        for k in range(n // 2 + 1):
            for s in range(k + 1):
                for pair in enumerate_D(n, k, s):
                    shape = pair.shape
                    assert len(shape) < 2 or shape[1] <= k
                    if s == 0:
                        assert pair.Q.is_standard()


def test_quasi_tableau_validation():
    q = QuasiTableau([[1, 2, 4], [3]], k=2, s=1)
    assert q.a_values == (4,) and q.b_values == ()
    # same rows, different split: the tail may start below a_s
    QuasiTableau([[1, 2, 4, 3]], k=2, s=1)
    QuasiTableau([[1, 2, 4, 3]], k=2, s=2)
    with pytest.raises(ValueError):
        QuasiTableau([[1, 3, 4], [2]], k=2, s=1)  # must start 1..n-k
    with pytest.raises(ValueError):
        QuasiTableau([[1, 2, 3, 4], [5]], k=3, s=2)  # a-values must decrease
    with pytest.raises(ValueError):
        QuasiTableau([[1, 2, 6, 3], [5], [4]], k=4, s=1)  # lower rows not standard
    assert q == Tableau([[1, 2, 4], [3]])


def test_json_round_trip():
    pair = rsk(P("2413"))
    again = TableauPair.from_json(pair.to_json())
    assert again == pair
    assert isinstance(again.P, StandardTableau)
    assert tableau_from_json({"rows": []}).rows == ()
    assert type(tableau_from_json([[1, 2, 4, 3]])) is Tableau
