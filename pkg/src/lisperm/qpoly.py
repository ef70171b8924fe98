"""Exact integer polynomials in q and the generating functions of inverse major index."""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .permcore import Permutation, as_word, check_cap, enumerate_C, imaj


class QPolynomial:
    """Dense integer polynomial; ``coeffs[d]`` is the coefficient of ``q**d``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def parse(cls, text: str) -> QPolynomial:
        return cls(json.loads(text))

    @staticmethod
    def _coerce(other) -> QPolynomial:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[d] + other[d] for d in range(size))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = QPolynomial([1])
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def truncate(self, max_degree: int) -> QPolynomial:
        return QPolynomial(self.coeffs[: max_degree + 1])

    def to_text(self) -> str:
        return json.dumps(list(self.coeffs), separators=(",", ":"))

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((c < 0, body))
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.pretty()


ONE = QPolynomial([1])


def q_int(n: int) -> QPolynomial:
    if n < 1:
        raise ValueError(f"q_int needs n >= 1, got {n}")
    return QPolynomial([1] * n)


def q_falling(n: int, r: int) -> QPolynomial:
    """``[n]_q [n-1]_q ... [n-r+1]_q``."""
    if n < 0 or not 0 <= r <= n:
        raise ValueError(f"q_falling needs 0 <= r <= n, got n={n}, r={r}")
    result = ONE
    for j in range(n - r + 1, n + 1):
        result = result * q_int(j)
    return result


def imaj_gf(perms: Iterable[Permutation | Sequence[int]]) -> QPolynomial:
    counts = Counter(imaj(as_word(w)) for w in perms)
    if not counts:
        return QPolynomial()
    top = max(counts)
    return QPolynomial(counts.get(d, 0) for d in range(top + 1))


def stat_gf(values: Iterable[int]) -> QPolynomial:
    """Generating function ``sum q**v`` of a stream of nonnegative statistics."""
    counts = Counter(values)
    if not counts:
        return QPolynomial()
    return QPolynomial(counts.get(d, 0) for d in range(max(counts) + 1))


def alternating_falling_sum(n: int, k: int) -> QPolynomial:
    """``sum_r (-1)^(k-r) C(k, r) [n]_q...[n-r+1]_q`` with no regime check."""
    total = QPolynomial()
    for r in range(k + 1):
        total = total + (-1) ** (k - r) * comb(k, r) * q_falling(n, r)
    return total


def thm2_rhs(n: int, k: int) -> QPolynomial:
    if k < 0 or n < 2 * k:
        raise ValueError(f"the closed form is only asserted for n >= 2k, got n={n}, k={k}")
    return alternating_falling_sum(n, k)


def wp_via_linear_extensions(n: int, s: int, cap: int | None = None) -> QPolynomial:
    """``sum q**maj(w^-1)`` over ``C(n, s)``: the maj generating function of the
    linear extensions of a chain on ``1..n-s`` plus ``s`` free points."""
    return imaj_gf(enumerate_C(n, s, cap))


def _series_inverse_one_minus(power: int, max_degree: int) -> QPolynomial:
    """Truncation of ``1 / (1 - q**power)``."""
    c = [0] * (max_degree + 1)
    for d in range(0, max_degree + 1, power):
        c[d] = 1
    return QPolynomial(c)


def gp_series(n: int, s: int, max_degree: int) -> QPolynomial:
    """Truncated ``1/((1-q)...(1-q^(n-s))) * 1/(1-q)^s``."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")
    result = ONE
    for i in range(1, n - s + 1):
        result = (result * _series_inverse_one_minus(i, max_degree)).truncate(max_degree)
    for _ in range(s):
        result = (result * _series_inverse_one_minus(1, max_degree)).truncate(max_degree)
    return result


def p_partition_counts(n: int, s: int, max_degree: int) -> QPolynomial:
    """Count order-reversing maps straight from the definition.

    ``a(m)`` is the number of sequences ``tau_1..tau_n >= 0`` summing to ``m``
    whose first ``n - s`` entries are weakly decreasing. Counted by recursion
    over positions, with no generating-function identities involved.
    """
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")
    chain = n - s

    @lru_cache(maxsize=None)
    def ways(pos: int, bound: int, remaining: int) -> int:
        if pos == n:
            return 1 if remaining == 0 else 0
        if pos < chain:
            return sum(ways(pos + 1, v, remaining - v) for v in range(min(bound, remaining) + 1))
        return sum(ways(pos + 1, 0, remaining - v) for v in range(remaining + 1))

    return QPolynomial(ways(0, m, m) for m in range(max_degree + 1))


def product_one_minus(n: int) -> QPolynomial:
    """``(1-q)(1-q^2)...(1-q^n)``."""
    result = ONE
    for i in range(1, n + 1):
        result = result * (ONE - QPolynomial.monomial(i))
    return result


def verify_lemma_qinv(n: int, s: int, cap: int | None = None) -> bool:
    """Both routes to ``sum_{C(n,s)} q**maj(w^-1) = [n]_q...[n-s+1]_q``.

    (a) direct enumeration against ``q_falling``; (b) the P-partition
    factorization, using the brute-force ``a(m)`` counts truncated at
    ``n(n-1)/2`` (the largest possible major index), times
    ``(1-q)...(1-q^n)``. The product-formula series is also compared with
    the brute-force counts.
    """
    check_cap(n, cap)
    wp = wp_via_linear_extensions(n, s, cap)
    if wp != q_falling(n, s):
        return False
    top = n * (n - 1) // 2
    counts = p_partition_counts(n, s, top)
    if counts != gp_series(n, s, top):
        return False
    return (counts * product_one_minus(n)).truncate(top) == wp
