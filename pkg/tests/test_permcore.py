from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lisperm.permcore import (
    CAP_ENV_VAR,
    Permutation,
    SizeLimitError,
    descent_set,
    enumerate_C,
    enumerate_Pi,
    enumerate_Sn,
    idescent_set,
    imaj,
    inverse,
    is_in_C,
    is_in_Pi,
    lis_length,
    lis_length_oracle,
    maj,
)

P = Permutation.parse


def perms_strategy(max_n=30):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(lambda w: Permutation(tuple(w)))
    )


def composes_to_identity(w, v):
    return all(w.word[v.word[i] - 1] == i + 1 for i in range(v.n))


@pytest.mark.parametrize(
    "w, expected", [("1234", "1234"), ("2413", "3142"), ("3421", "4312")]
)
def test_inverse_examples(w, expected):
    inv = inverse(P(w))
    assert str(inv) == expected
    assert composes_to_identity(P(w), inv)
    assert composes_to_identity(inv, P(w))


@pytest.mark.parametrize(
    "w, expected", [("1234", set()), ("2513467", {2}), ("12468537", {5, 6})]
)
def test_descent_set_examples(w, expected):
    assert descent_set(P(w)) == expected


@pytest.mark.parametrize("w, expected", [("123456", set()), ("2413", {1, 3}), ("21", {1})])
def test_idescent_set_examples(w, expected):
    assert idescent_set(P(w)) == expected


def test_maj_examples():
    assert maj(Permutation.identity(6)) == 0
    assert maj(P("2513467")) == 2
    assert imaj(P("1432")) == 5


@pytest.mark.parametrize("w, expected", [("2513467", 5), ("12684357", 5), ("1243", 3), ("3412", 2)])
def test_lis_examples(w, expected):
    assert lis_length(P(w)) == expected
    assert lis_length_oracle(P(w)) == expected


def test_lis_extremes():
    for n in range(1, 12):
        ident = Permutation.identity(n)
        rev = Permutation(tuple(range(n, 0, -1)))
        assert lis_length(ident) == n
        assert lis_length_oracle(rev) == 1


def test_lis_matches_oracle_exhaustively():
    for n in range(1, 9):
        for word in permutations(range(1, n + 1)):
            assert lis_length(word) == lis_length_oracle(word), word


@given(perms_strategy())
def test_inverse_is_involution_and_transfers_descents(w):
    assert inverse(inverse(w)) == w
    assert descent_set(inverse(w)) == idescent_set(w)
    assert maj(w) == sum(descent_set(w))
    assert 0 <= maj(w) <= w.n * (w.n - 1) // 2


@given(perms_strategy(60))
def test_lis_matches_oracle_random(w):
    assert lis_length(w) == lis_length_oracle(w)


def test_class_membership_examples():
    assert is_in_C(P("1243"), 1) and is_in_Pi(P("1243"), 1)
    assert is_in_C(P("1234"), 1) and not is_in_Pi(P("1234"), 1)
    assert is_in_Pi(P("2341"), 1)


def test_enumerate_C_small():
    assert [str(w) for w in enumerate_C(3, 1)] == ["123", "132", "231"]


@pytest.mark.parametrize("n", range(0, 10))
def test_enumerate_C_cardinality(n):
    for s in range(n + 1):
        got = list(enumerate_C(n, s))
        assert len(got) == factorial(n) // factorial(n - s)
        assert len(set(got)) == len(got)


def test_enumerate_C_matches_filter_and_is_lexicographic():
    for n in range(1, 7):
        for s in range(n + 1):
            direct = [w.word for w in enumerate_C(n, s)]
            filtered = [w for w in permutations(range(1, n + 1)) if is_in_C(w, s)]
            assert direct == filtered  # permutations() is lexicographic too


def test_enumerate_Pi_examples():
    assert [str(w) for w in enumerate_Pi(2, 1)] == ["21"]
    assert [str(w) for w in enumerate_Pi(4, 2)] == ["1432", "2413", "2431", "3412", "3421"]
    for n in range(1, 8):
        assert list(enumerate_Pi(n, 0)) == [Permutation.identity(n)]


def test_degenerate_s_zero():
    assert list(enumerate_C(5, 0)) == [Permutation.identity(5)]


def test_cap_is_enforced(monkeypatch):
    with pytest.raises(SizeLimitError):
        next(enumerate_Sn(11))
    with pytest.raises(SizeLimitError):
        next(enumerate_C(12, 1))
    assert sum(1 for _ in enumerate_C(11, 1, cap=11)) == 11
    monkeypatch.setenv(CAP_ENV_VAR, "3")
    with pytest.raises(SizeLimitError):
        next(enumerate_Sn(4))


def test_bad_parameters():
    with pytest.raises(ValueError):
        next(enumerate_C(3, 4))
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        P("12a")


def test_text_formats():
    assert str(P("2,5,1,3,4,6,7")) == "2513467"
    big = Permutation(tuple(range(10, 0, -1)))
    assert str(big) == "10,9,8,7,6,5,4,3,2,1"
    assert Permutation.parse(str(big)) == big
