"""Relabelling bijections on recording tableaux and the inclusion-exclusion chain.

Both bijections leave the insertion tableau ``P`` untouched and only rewrite
the recording tableau ``Q``:

* ``recurrence_split`` / ``recurrence_merge``: pairs whose ``Q`` first row is
  ``1..n-k, b_1 < ... < b_s`` correspond to pairs whose ``Q`` first row is
  exactly ``1..n-k+s`` together with the set ``{b_i}``.
* ``d_to_c`` / ``c_to_d``: quasi-tableau pairs in ``D(n, k, s)`` correspond to
  standard pairs with ``Q`` first row starting ``1..n-k+s`` together with the
  set ``{a_i}``.

Both are only claimed for ``n >= 2k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .permcore import check_cap
from .tableau import (
    QuasiTableau,
    StandardTableau,
    TableauPair,
    descending_run_length,
    enumerate_Crsk,
    enumerate_D,
    enumerate_Pirsk,
)


class BijectionError(ValueError):
    """Input lies outside the domain on which a bijection is defined."""


class ChainError(AssertionError):
    """A set identity that should hold by construction failed."""


@dataclass(frozen=True)
class ValueSubset:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(sorted(int(v) for v in self.values))
        if len(set(vals)) != len(vals):
            raise ValueError(f"repeated values in {self.values}")
        object.__setattr__(self, "values", vals)

    @property
    def size(self) -> int:
        return len(self.values)

    def descending(self) -> tuple[int, ...]:
        return tuple(reversed(self.values))

    def check_window(self, n: int, k: int) -> None:
        lo = n - k + 1
        if any(not lo <= v <= n for v in self.values):
            raise BijectionError(f"subset {list(self.values)} not inside [{lo}, {n}]")


@dataclass(frozen=True)
class OrderMap:
    """The unique order-preserving bijection between two equal-size integer sets."""

    source: tuple[int, ...]
    target: tuple[int, ...]

    def __post_init__(self):
        src = tuple(sorted(set(self.source)))
        tgt = tuple(sorted(set(self.target)))
        if len(src) != len(self.source) or len(tgt) != len(self.target):
            raise ValueError("order map sets must not repeat values")
        if len(src) != len(tgt):
            raise ValueError(f"sizes differ: {len(src)} vs {len(tgt)}")
        object.__setattr__(self, "source", src)
        object.__setattr__(self, "target", tgt)

    def __call__(self, v: int) -> int:
        return order_map_apply(self, v)


def order_map_apply(f: OrderMap, v: int) -> int:
    try:
        return f.target[f.source.index(v)]
    except ValueError:
        raise ValueError(f"{v} is not in the domain {list(f.source)}") from None


def order_map_invert(f: OrderMap) -> OrderMap:
    return OrderMap(f.target, f.source)


def _window(n: int, k: int) -> list[int]:
    return list(range(n - k + 1, n + 1))


def _relabel_lower(rows, f: OrderMap) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(f(x) for x in row) for row in rows[1:])


def _check_regime(n: int, k: int) -> None:
    if n < 2 * k:
        raise BijectionError(f"only defined for n >= 2k, got n={n}, k={k}")


def recurrence_split(pair: TableauPair, k: int) -> tuple[TableauPair, ValueSubset]:
    """``(P, Q)`` with ``Q`` first row ``1..n-k, b_1..b_s`` -> ``((P, Q'), {b})``."""
    Q = pair.Q
    n = pair.n
    if not Q.is_standard():
        raise BijectionError("recording tableau is not standard")
    first = Q.rows[0]
    if not 0 <= k <= n or first[: n - k] != tuple(range(1, n - k + 1)):
        raise BijectionError(f"first row {first} does not start with 1..{n - k}")
    b = first[n - k :]
    s = len(b)
    f = OrderMap([v for v in _window(n, k) if v not in b], range(n - k + s + 1, n + 1))
    new_first = tuple(range(1, n - k + s + 1))
    Q2 = StandardTableau((new_first,) + _relabel_lower(Q.rows, f))
    return TableauPair(pair.P, Q2), ValueSubset(b)


def recurrence_merge(pair: TableauPair, b: ValueSubset | Sequence[int], k: int) -> TableauPair:
    if not isinstance(b, ValueSubset):
        b = ValueSubset(tuple(b))
    n = pair.n
    _check_regime(n, k)
    b.check_window(n, k)
    s = b.size
    Q2 = pair.Q
    if Q2.rows[0] != tuple(range(1, n - k + s + 1)):
        raise BijectionError(f"first row {Q2.rows[0]} is not exactly 1..{n - k + s}")
    f = OrderMap([v for v in _window(n, k) if v not in b.values], range(n - k + s + 1, n + 1))
    finv = order_map_invert(f)
    first = tuple(range(1, n - k + 1)) + b.values
    rows = (first,) + _relabel_lower(Q2.rows, finv)
    try:
        Q = StandardTableau(rows)
    except ValueError as exc:
        raise BijectionError(f"merged tableau is not standard: {exc}") from None
    return TableauPair(pair.P, Q)


def d_to_c(pair: TableauPair, k: int, s: int) -> tuple[TableauPair, ValueSubset]:
    """``D(n, k, s)`` -> ``Crsk(n, k - s)`` x s-subsets of ``[n-k+1, n]``."""
    n = pair.n
    _check_regime(n, k)
    try:
        Q = QuasiTableau(pair.Q.rows, k=k, s=s)
    except ValueError as exc:
        raise BijectionError(str(exc)) from None
    a = Q.a_values
    f = OrderMap([v for v in _window(n, k) if v not in a], range(n - k + s + 1, n + 1))
    first = tuple(range(1, n - k + s + 1)) + tuple(f(x) for x in Q.b_values)
    rows = (first,) + _relabel_lower(Q.rows, f)
    try:
        Q2 = StandardTableau(rows)
    except ValueError as exc:
        raise BijectionError(f"relabelled tableau is not standard: {exc}") from None
    return TableauPair(pair.P, Q2), ValueSubset(a)


def c_to_d(pair: TableauPair, a: ValueSubset | Sequence[int], k: int) -> TableauPair:
    if not isinstance(a, ValueSubset):
        a = ValueSubset(tuple(a))
    n = pair.n
    _check_regime(n, k)
    a.check_window(n, k)
    s = a.size
    Q2 = pair.Q
    if not Q2.is_standard():
        raise BijectionError("recording tableau is not standard")
    if Q2.rows[0][: n - k + s] != tuple(range(1, n - k + s + 1)):
        raise BijectionError(f"first row {Q2.rows[0]} does not start with 1..{n - k + s}")
    f = OrderMap([v for v in _window(n, k) if v not in a.values], range(n - k + s + 1, n + 1))
    finv = order_map_invert(f)
    first = (
        tuple(range(1, n - k + 1))
        + a.descending()
        + tuple(finv(x) for x in Q2.rows[0][n - k + s :])
    )
    rows = (first,) + _relabel_lower(Q2.rows, finv)
    return TableauPair(pair.P, QuasiTableau(rows, k=k, s=s))


def enumerate_Crsk_nks(n: int, k: int, s: int, cap: int | None = None) -> Iterator[TableauPair]:
    """Members of ``Crsk(n, k)`` whose first row has length exactly ``n - k + s``.

    This is also the family the q-corollary of the recurrence sums over.
    """
    for pair in enumerate_Crsk(n, k, cap):
        if pair.shape[0] == n - k + s:
            yield pair


def e_chain(n: int, k: int, cap: int | None = None) -> list[set[TableauPair]]:
    """Build ``E_1, ..., E_{k+1}`` and check every relation the chain promises.

    ``E_1 = Crsk(n, k) - Pirsk(n, k)`` and ``E_{l+1} = D(n, k, l) - E_l``.
    Raises :class:`ChainError` if ``E_l`` escapes ``D(n, k, l)``, if
    ``E_k != D(n, k, k)``, if ``E_{k+1}`` is nonempty, or if some ``E_l``
    member's first row does not have a descending run of length exactly ``l``.
    """
    _check_regime(n, k)
    check_cap(n, cap)
    C = set(enumerate_Crsk(n, k, cap))
    Pi = set(enumerate_Pirsk(n, k, cap))
    if not Pi <= C:
        raise ChainError("Pirsk is not contained in Crsk")
    D = {l: set(enumerate_D(n, k, l, cap)) for l in range(1, k + 1)}
    chain = [C - Pi]
    for l in range(1, k + 1):
        E = chain[-1]
        if not E <= D[l]:
            raise ChainError(f"E_{l} is not contained in D_{l}")
        bad = [p for p in E if descending_run_length(p.Q, k) != l]
        if bad:
            raise ChainError(f"E_{l} holds {len(bad)} pairs with the wrong run length")
        chain.append(D[l] - E)
    if k >= 1 and chain[k - 1] != D[k]:
        raise ChainError(f"E_{k} differs from D_{k}")
    if chain[k]:
        raise ChainError(f"E_{k + 1} is not empty")
    return chain


def setie_rhs(n: int, k: int, cap: int | None = None) -> set[TableauPair]:
    """``Crsk(n,k) - (D_1 - (D_2 - ... - (D_{k-1} - D_k)))`` evaluated as sets."""
    _check_regime(n, k)
    inner: set[TableauPair] = set()
    for l in range(k, 0, -1):
        inner = set(enumerate_D(n, k, l, cap)) - inner
    return set(enumerate_Crsk(n, k, cap)) - inner

