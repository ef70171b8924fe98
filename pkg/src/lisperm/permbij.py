"""Permutation-only bijections built from least-lexicographic increasing subsequences.

``lli(pi, m)`` is the length-``m`` increasing subsequence that finishes as
early as possible and, among those, has the lexicographically least index
vector. ``phi`` trades the tail of that subsequence for one more slot of
increasing prefix; ``psi`` undoes it.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Sequence

from .permcore import (
    Permutation,
    as_word,
    check_cap,
    enumerate_C,
    enumerate_Pi,
    idescent_set,
    is_in_C,
    lis_length,
)


class DomainError(ValueError):
    """Input is outside the domain of phi or psi."""


@dataclass(frozen=True)
class IndexSubsequence:
    indices: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.indices)

    @property
    def last(self) -> int:
        return self.indices[-1]


@dataclass(frozen=True)
class PhiResult:
    w: Permutation
    a: int

    def to_json(self) -> dict:
        return {"w": str(self.w), "a": self.a}


def _first_reach(word: Sequence[int], m: int) -> int | None:
    """Least 1-based prefix length whose LIS reaches ``m``."""
    tops: list[int] = []
    for pos, x in enumerate(word, start=1):
        i = bisect_left(tops, x)
        if i == len(tops):
            tops.append(x)
            if len(tops) == m:
                return pos
        else:
            tops[i] = x
    return None


def lli(pi: Permutation | Sequence[int], m: int) -> IndexSubsequence | None:
    word = as_word(pi)
    n = len(word)
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in 1..{n}, got {m}")
    a = _first_reach(word, m)
    if a is None:
        return None
    end = a - 1
    # reach[i]: longest increasing run from i that ends exactly at end
    reach = [0] * a
    reach[end] = 1
    for i in range(end - 1, -1, -1):
        if word[i] < word[end]:
            best = 0
            for j in range(i + 1, a):
                if reach[j] and word[i] < word[j] and reach[j] > best:
                    best = reach[j]
            reach[i] = best + 1 if best else 0
    picked: list[int] = []
    prev_val = 0
    start = 0
    for need in range(m, 0, -1):
        for i in range(start, a):
            if word[i] > prev_val and reach[i] >= need:
                picked.append(i)
                prev_val = word[i]
                start = i + 1
                break
        else:  # pragma: no cover - reach guarantees a choice
            raise AssertionError("greedy selection stalled")
    return IndexSubsequence(tuple(i + 1 for i in picked), tuple(word[i] for i in picked))


def _leading_run(indices: Sequence[int]) -> int:
    l = 0
    while l < len(indices) and indices[l] == l + 1:
        l += 1
    return l


def phi(pi: Permutation | Sequence[int], s: int) -> PhiResult:
    word = as_word(pi)
    n = len(word)
    if s < 1 or n < 2 * s:
        raise DomainError(f"phi needs 1 <= s and n >= 2s, got n={n}, s={s}")
    if not is_in_C(word, s):
        raise DomainError(f"{Permutation(word)} is not in C({n}, {s})")
    m = n - s + 1
    sigma = lli(word, m)
    if sigma is None:
        raise DomainError(f"{Permutation(word)} has no increasing subsequence of length {m}")
    idx = sigma.indices
    # a fully consecutive sigma is the fixed point case: Phi(pi) = (pi, m)
    l = min(_leading_run(idx), m - 1)
    out = list(word)
    for j in range(l, m - 1):
        out[idx[j] - 1] = word[idx[j + 1] - 1]
    a = idx[-1]
    moved = word[idx[l] - 1]
    del out[a - 1]
    out.insert(l, moved)
    return PhiResult(Permutation(tuple(out)), a)


def _largest_lex(word: Sequence[int], limit: int, m: int) -> list[int] | None:
    """0-based indices of the length-``m`` increasing subsequence of ``word[:limit]``
    with the lexicographically largest index vector, chosen greedily from the right."""
    # ext[i]: longest increasing subsequence of word[:limit] starting at i
    ext = [1] * limit
    for i in range(limit - 1, -1, -1):
        for j in range(i + 1, limit):
            if word[j] > word[i] and ext[j] + 1 > ext[i]:
                ext[i] = ext[j] + 1
    picked: list[int] = []
    prev_val = 0
    start = 0
    for need in range(m, 0, -1):
        for i in range(limit - 1, start - 1, -1):
            if word[i] > prev_val and ext[i] >= need:
                picked.append(i)
                prev_val = word[i]
                start = i + 1
                break
        else:
            return None
    return picked


def in_phi_image(w: Permutation | Sequence[int], a: int, s: int) -> bool:
    """The image of ``C(n, s, a)`` under phi: ``w`` in ``C(n, s-1)`` and the
    length-``a`` prefix has LIS exactly ``n - s + 1``."""
    word = as_word(w)
    n = len(word)
    if s < 1 or not n - s + 1 <= a <= n:
        return False
    return is_in_C(word, s - 1) and lis_length(word[:a]) == n - s + 1


def psi(w: Permutation | Sequence[int], a: int, s: int) -> Permutation:
    word = as_word(w)
    n = len(word)
    if s < 1 or n < 2 * s:
        raise DomainError(f"psi needs 1 <= s and n >= 2s, got n={n}, s={s}")
    if not in_phi_image(word, a, s):
        raise DomainError(f"({Permutation(word)}, {a}) is not in the image of phi for s={s}")
    m = n - s + 1
    q = _largest_lex(word, a, m)
    assert q is not None  # the prefix 1..m is always a candidate
    r = _leading_run([i + 1 for i in q])
    if r == 0:
        raise DomainError(f"largest-index subsequence of {Permutation(word)} skips position 1")
    # sigma values from position r on move one step right along sigma
    out = list(word)
    for j in range(r, m):
        out[q[j]] = word[q[j - 1]]
    out.insert(a, word[q[m - 1]])
    del out[r - 1]
    return Permutation(tuple(out))


def in_C_nsa(pi: Permutation | Sequence[int], s: int, a: int) -> bool:
    word = as_word(pi)
    n = len(word)
    m = n - s + 1
    if not 1 <= m <= n or not is_in_C(word, s):
        return False
    sigma = lli(word, m)
    return sigma is not None and sigma.last == a


def image_complement(n: int, s: int, a: int, cap: int | None = None) -> set[Permutation]:
    """``C(n, s-1) x {a}`` minus ``phi(C(n, s, a))``, checked against the union of
    ``C(n, s-1, b)`` for ``n-s+2 <= b <= a``; returns the common set."""
    if s < 1 or n < 2 * s:
        raise DomainError(f"needs 1 <= s and n >= 2s, got n={n}, s={s}")
    if not n - s + 1 <= a <= n:
        raise DomainError(f"a must lie in [{n - s + 1}, {n}], got {a}")
    check_cap(n, cap)
    image = {phi(pi, s).w for pi in enumerate_C(n, s, cap) if in_C_nsa(pi, s, a)}
    base = set(enumerate_C(n, s - 1, cap))
    left = base - image
    right = {
        w for w in base if any(in_C_nsa(w, s - 1, b) for b in range(n - s + 2, a + 1))
    }
    if left != right:
        raise AssertionError(
            f"image complement mismatch at n={n}, s={s}, a={a}: "
            f"{len(left)} vs {len(right)}"
        )
    return left


def weakly_decreasing_tuples(n: int, k: int, r: int) -> list[tuple[int, ...]]:
    """Tuples ``(a_r, ..., a_1)`` with ``n-k+r <= a_r <= ... <= a_1 <= n``."""
    lo = n - k + r
    out = []
    for t in product(range(lo, n + 1), repeat=r):
        if all(t[i] <= t[i + 1] for i in range(r - 1)):
            out.append(t)
    return out


@dataclass
class ChainLevel:
    r: int
    sign: int
    base_size: int  # |C(n, k-r)|
    tuple_count: int  # number of (a_r, ..., a_1)
    remainder: int  # |L_{r+1}|, the part subtracted at the next level


def permset_chain(n: int, k: int, cap: int | None = None) -> list[ChainLevel]:
    """Unroll the telescoping identity for ``C(n, k) - Pi(n, k)`` level by level.

    Level ``r`` works with ``L_r``: tuples ``(pi, a_{r-1}, ..., a_1)`` where
    ``pi`` lies in ``C(n, k-r+1, a_r)`` for some ``a_r <= a_{r-1}``. Each level
    checks that phi is injective on ``L_r``, that psi inverts it, and that
    ``phi(L_r) = C(n, k-r) x A_r - L_{r+1}`` element-wise. Returns one signed
    level per ``r = 0..k``; the signed sum of ``base_size * tuple_count`` is
    ``|Pi(n, k)|``.
    """
    if n < 2 * k:
        raise DomainError(f"needs n >= 2k, got n={n}, k={k}")
    check_cap(n, cap)
    C = list(enumerate_C(n, k, cap))
    Pi = set(enumerate_Pi(n, k, cap))
    L = {(pi,) for pi in C if pi not in Pi}
    union = {(pi,) for pi in C for a in range(n - k + 1, n + 1) if in_C_nsa(pi, k, a)}
    if L != union:
        raise AssertionError("C(n,k) - Pi(n,k) is not the union of C(n,k,a)")
    levels = [ChainLevel(0, 1, len(C), 1, len(L))]
    for r in range(1, k + 1):
        s = k - r + 1
        image = set()
        for item in L:
            pi, rest = item[0], item[1:]
            res = phi(pi, s)
            if idescent_set(res.w) != idescent_set(pi):
                raise AssertionError(f"phi changes the inverse descent set of {pi}")
            if psi(res.w, res.a, s) != pi:
                raise AssertionError(f"psi does not invert phi at {pi}, s={s}")
            image.add((res.w, res.a) + rest)
        if len(image) != len(L):
            raise AssertionError(f"phi is not injective at level {r}")
        tuples = weakly_decreasing_tuples(n, k, r)
        if len(tuples) != comb(k, r):
            raise AssertionError(f"{len(tuples)} tuples at level {r}, expected C({k},{r})")
        base = list(enumerate_C(n, k - r, cap))
        full = {(w,) + t for w in base for t in tuples}
        nxt = set()
        if r < k:
            lo = n - k + r + 1
            for w in base:
                for b in range(lo, n + 1):
                    if in_C_nsa(w, k - r, b):
                        nxt.update((w,) + t for t in tuples if b <= t[0])
        if not nxt <= full or image != full - nxt:
            raise AssertionError(f"level {r} set difference fails")
        levels.append(ChainLevel(r, (-1) ** r, len(base), len(tuples), len(nxt)))
        L = nxt
    if L:
        raise AssertionError("chain does not terminate in the empty set")
    return levels


def chain_count(levels: list[ChainLevel]) -> int:
    return sum(lv.sign * lv.base_size * lv.tuple_count for lv in levels)


def descent_preserved(pi: Permutation | Sequence[int], s: int) -> bool:
    return idescent_set(pi) == idescent_set(phi(pi, s).w)
