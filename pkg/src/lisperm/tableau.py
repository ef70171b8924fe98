"""Young tableaux, RSK, and the tableau-pair sets built on the recording tableau.

Tableaux are immutable row-lists. Equality and hashing depend only on the
rows, so a ``QuasiTableau`` that happens to be standard compares equal to the
``StandardTableau`` with the same entries; set algebra over mixed families of
pairs relies on this.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .permcore import Permutation, as_word, check_cap

Rows = tuple[tuple[int, ...], ...]


def _freeze(rows: Sequence[Sequence[int]]) -> Rows:
    return tuple(tuple(int(x) for x in row) for row in rows)


def is_partition(shape: Sequence[int]) -> bool:
    return all(r > 0 for r in shape) and all(
        shape[i] >= shape[i + 1] for i in range(len(shape) - 1)
    )


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True, eq=False)
class Tableau:
    rows: Rows

    def __post_init__(self):
        rows = _freeze(self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(row) == 0 for row in rows):
            raise ValueError("tableau rows must be nonempty")
        if not is_partition(self.shape):
            raise ValueError(f"row lengths {self.shape} are not weakly decreasing")
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries of {rows} are not exactly 1..{len(entries)}")

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[list(r) for r in self.rows]})"

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def cell_of(self, value: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows):
            if value in row:
                return i, row.index(value)
        raise KeyError(value)

    def row_index(self) -> dict[int, int]:
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def is_standard(self) -> bool:
        return _rows_standard(self.rows)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}


def _rows_standard(rows: Rows) -> bool:
    for i, row in enumerate(rows):
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
        if i > 0:
            above = rows[i - 1]
            if any(above[j] >= row[j] for j in range(len(row))):
                return False
    return True


class StandardTableau(Tableau):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_standard():
            raise ValueError(f"{[list(r) for r in self.rows]} is not standard")


@dataclass(frozen=True, eq=False)
class QuasiTableau(Tableau):
    """Recording tableau of a pair in ``D(n, k, s)``.

    First row: ``1..n-k``, then ``s`` strictly decreasing values, then a
    strictly increasing tail. Rows below the first are standard on their own
    value set. The split after the ``s`` decreasing values is fixed by ``s``;
    the tail may begin below ``a_s``, so one tableau can belong to several
    ``D(n, k, s)``.
    """

    k: int = 0
    s: int = 0

    def __post_init__(self):
        super().__post_init__()
        problem = quasi_pattern_problem(self.rows, self.k, self.s)
        if problem:
            raise ValueError(problem)

    def __repr__(self):
        return f"QuasiTableau({[list(r) for r in self.rows]}, k={self.k}, s={self.s})"

    @property
    def a_values(self) -> tuple[int, ...]:
        start = self.n - self.k
        return self.rows[0][start : start + self.s]

    @property
    def b_values(self) -> tuple[int, ...]:
        return self.rows[0][self.n - self.k + self.s :]


def quasi_pattern_problem(rows: Rows, k: int, s: int) -> str | None:
    """Describe why ``rows`` is not a ``D(n, k, s)`` recording tableau, or None."""
    n = sum(len(r) for r in rows)
    if not 0 <= s <= k <= n:
        return f"need 0 <= s <= k <= n, got n={n}, k={k}, s={s}"
    first = rows[0] if rows else ()
    if len(first) < n - k + s:
        return f"first row {first} shorter than n-k+s={n - k + s}"
    if first[: n - k] != tuple(range(1, n - k + 1)):
        return f"first row {first} does not start with 1..{n - k}"
    a = first[n - k : n - k + s]
    b = first[n - k + s :]
    if any(a[i] <= a[i + 1] for i in range(len(a) - 1)):
        return f"a-values {a} are not strictly decreasing"
    if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
        return f"b-values {b} are not strictly increasing"
    if not _rows_standard(rows[1:]):
        return "rows below the first are not standard"
    return None


def descending_run_length(Q: Tableau, k: int) -> int:
    """Length of the maximal strictly decreasing run right after ``1..n-k``."""
    first = Q.rows[0]
    start = Q.n - k
    if len(first) <= start:
        return 0
    run = 1
    while start + run < len(first) and first[start + run] < first[start + run - 1]:
        run += 1
    return run


@dataclass(frozen=True)
class TableauPair:
    P: Tableau
    Q: Tableau

    def __post_init__(self):
        if self.P.shape != self.Q.shape:
            raise ValueError(f"shapes differ: {self.P.shape} vs {self.Q.shape}")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.P.shape

    @property
    def n(self) -> int:
        return self.P.n

    def key(self) -> tuple[Rows, Rows]:
        return (self.P.rows, self.Q.rows)

    def to_json(self) -> dict:
        return {"P": self.P.to_json(), "Q": self.Q.to_json()}

    @classmethod
    def from_json(cls, data: dict | str) -> TableauPair:
        if isinstance(data, str):
            data = json.loads(data)
        P = tableau_from_json(data["P"])
        Q = tableau_from_json(data["Q"])
        return cls(P, Q)


def tableau_from_json(data: dict | list | str) -> Tableau:
    """Build the most specific tableau type the rows support."""
    if isinstance(data, str):
        data = json.loads(data)
    rows = data["rows"] if isinstance(data, dict) else data
    rows = _freeze(rows)
    if _rows_standard(rows):
        return StandardTableau(rows)
    return Tableau(rows)


def row_insert(P: Tableau | Sequence[Sequence[int]], x: int) -> tuple[Rows, int]:
    """Schensted row insertion of ``x`` into a row-strict, column-strict filling.

    ``P`` may be a partial filling (any distinct values), so the result is
    returned as rows together with the 1-based index of the row that grew.
    """
    rows = [list(r) for r in (P.rows if isinstance(P, Tableau) else P)]
    if any(x in row for row in rows):
        raise ValueError(f"{x} is already in the tableau")
    i = _bump(rows, x)
    return _freeze(rows), i + 1


def _bump(rows: list[list[int]], x: int) -> int:
    for i, row in enumerate(rows):
        j = _first_greater(row, x)
        if j == len(row):
            row.append(x)
            return i
        row[j], x = x, row[j]
    rows.append([x])
    return len(rows) - 1


def _first_greater(row: list[int], x: int) -> int:
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] > x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def rsk(w: Permutation | Sequence[int]) -> TableauPair:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(as_word(w), start=1):
        i = _bump(P, x)
        if i == len(Q):
            Q.append([])
        Q[i].append(step)
    return TableauPair(StandardTableau(P), StandardTableau(Q))


def rsk_inverse(pair: TableauPair) -> Permutation:
    P, Q = pair.P, pair.Q
    if P.shape != Q.shape:
        raise ValueError("P and Q have different shapes")
    if not (P.is_standard() and Q.is_standard()):
        raise ValueError("rsk_inverse needs two standard tableaux")
    rows = [list(r) for r in P.rows]
    where = Q.row_index()
    word = [0] * P.n
    for step in range(P.n, 0, -1):
        i = where[step]
        x = rows[i].pop()
        if not rows[i]:
            rows.pop()
        for r in range(i - 1, -1, -1):
            row = rows[r]
            # largest entry smaller than x
            j = _first_greater(row, x) - 1
            row[j], x = x, row[j]
        word[step - 1] = x
    return Permutation(tuple(word))


def tableau_descent_set(T: Tableau) -> frozenset[int]:
    where = T.row_index()
    return frozenset(i for i in range(1, T.n) if where[i + 1] > where[i])


def tableau_maj(T: Tableau) -> int:
    return sum(tableau_descent_set(T))


def _syt_rows(shape: tuple[int, ...], values: Sequence[int]) -> Iterator[Rows]:
    """Standard fillings of ``shape`` by the sorted ``values``, by backtracking.

    The i-th smallest value goes into an addable cell, trying rows top to
    bottom, so output order is deterministic.
    """
    n = sum(shape)
    if n == 0:
        yield ()
        return
    filled = [[] for _ in shape]

    def place(idx: int):
        if idx == n:
            yield tuple(tuple(r) for r in filled)
            return
        v = values[idx]
        for i, target in enumerate(shape):
            length = len(filled[i])
            if length < target and (i == 0 or len(filled[i - 1]) > length):
                filled[i].append(v)
                yield from place(idx + 1)
                filled[i].pop()

    yield from place(0)


def enumerate_syt(shape: Sequence[int], cap: int | None = None) -> Iterator[StandardTableau]:
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    check_cap(sum(shape), cap)
    for rows in _syt_rows(shape, range(1, sum(shape) + 1)):
        yield StandardTableau(rows)


def _check_ns(n: int, s: int) -> None:
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")


def _pairs_with_recording(n: int, keep, cap: int | None) -> Iterator[TableauPair]:
    check_cap(n, cap)
    for shape in partitions(n):
        Qs = [Q for Q in enumerate_syt(shape, cap) if keep(Q)]
        if not Qs:
            continue
        Ps = list(enumerate_syt(shape, cap))
        for Q in Qs:
            for P in Ps:
                yield TableauPair(P, Q)


def enumerate_Crsk(n: int, s: int, cap: int | None = None) -> Iterator[TableauPair]:
    """Same-shape standard pairs whose recording tableau's first row starts ``1..n-s``."""
    _check_ns(n, s)
    prefix = tuple(range(1, n - s + 1))
    return _pairs_with_recording(n, lambda Q: Q.rows[0][: n - s] == prefix, cap)


def enumerate_Pirsk(n: int, k: int, cap: int | None = None) -> Iterator[TableauPair]:
    """Same-shape standard pairs whose recording tableau's first row is exactly ``1..n-k``."""
    _check_ns(n, k)
    prefix = tuple(range(1, n - k + 1))
    return _pairs_with_recording(n, lambda Q: Q.rows[0] == prefix, cap)


def enumerate_D(n: int, k: int, s: int, cap: int | None = None) -> Iterator[TableauPair]:
    """Pairs ``(P, Q)`` with ``Q`` a quasi-tableau for ``(n, k, s)``, built directly.

    For each shape the first row of ``Q`` is assembled from ``1..n-k``, a
    decreasing choice of ``s`` values and an increasing choice of tail values;
    the leftover values fill the lower rows standardly.
    """
    if n < 2 * k:
        raise ValueError(f"D(n, k, s) needs n >= 2k, got n={n}, k={k}")
    if not 0 <= s <= k:
        raise ValueError(f"need 0 <= s <= k, got s={s}, k={k}")
    check_cap(n, cap)
    head = tuple(range(1, n - k + 1))
    top = list(range(n - k + 1, n + 1))
    for shape in partitions(n):
        tail_len = shape[0] - (n - k) - s
        if tail_len < 0:
            continue
        Ps = None
        for a in combinations(top, s):
            rest = [v for v in top if v not in a]
            for b in combinations(rest, tail_len):
                below = [v for v in rest if v not in b]
                first = head + tuple(reversed(a)) + b
                for lower in _syt_rows(shape[1:], below):
                    Q = QuasiTableau((first,) + lower, k=k, s=s)
                    if Ps is None:
                        Ps = list(enumerate_syt(shape, cap))
                    for P in Ps:
                        yield TableauPair(P, Q)


def render(T: Tableau) -> str:
    width = max((len(str(x)) for row in T.rows for x in row), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in T.rows)
