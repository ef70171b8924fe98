"""Permutations in one-line notation, their statistics, and the prefix-increasing classes.

Values and positions are 1-based throughout. ``C(n, s)`` is the set of
permutations whose first ``n - s`` entries increase; ``Pi(n, k)`` keeps the
members of ``C(n, k)`` whose longest increasing subsequence has length
exactly ``n - k``.
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

DEFAULT_CAP = 10
CAP_ENV_VAR = "LISPERM_CAP"


class SizeLimitError(ValueError):
    """Raised when an enumeration would exceed the configured size cap."""


def enumeration_cap() -> int:
    value = os.environ.get(CAP_ENV_VAR)
    return int(value) if value else DEFAULT_CAP


def check_cap(n: int, cap: int | None = None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise SizeLimitError(
            f"n={n} exceeds the enumeration cap {limit} "
            f"(raise it with --cap or ${CAP_ENV_VAR})"
        )


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")

    @property
    def n(self) -> int:
        return len(self.word)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"2513467"`` (n <= 9) or ``"2,5,1,3,4,6,7"``."""
        text = text.strip()
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = list(text)
        try:
            word = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
        return cls(word)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.word)
        return ",".join(str(x) for x in self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __lt__(self, other: Permutation) -> bool:
        return self.word < other.word


def as_word(w: Permutation | Sequence[int]) -> tuple[int, ...]:
    return w.word if isinstance(w, Permutation) else tuple(w)


def inverse(w: Permutation) -> Permutation:
    word = as_word(w)
    inv = [0] * len(word)
    for pos, val in enumerate(word, start=1):
        inv[val - 1] = pos
    return Permutation(tuple(inv))


def descent_set(w: Permutation | Sequence[int]) -> frozenset[int]:
    word = as_word(w)
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def idescent_set(w: Permutation | Sequence[int]) -> frozenset[int]:
    """Values ``i`` such that ``i + 1`` appears to the left of ``i``."""
    word = as_word(w)
    pos = {v: p for p, v in enumerate(word)}
    return frozenset(i for i in range(1, len(word)) if pos[i + 1] < pos[i])


def maj(w: Permutation | Sequence[int]) -> int:
    return sum(descent_set(w))


def imaj(w: Permutation | Sequence[int]) -> int:
    return sum(idescent_set(w))


def lis_length(w: Permutation | Sequence[int]) -> int:
    """Longest increasing subsequence length by patience sorting."""
    tops: list[int] = []
    for x in as_word(w):
        i = bisect_left(tops, x)
        if i == len(tops):
            tops.append(x)
        else:
            tops[i] = x
    return len(tops)


def lis_length_oracle(w: Permutation | Sequence[int]) -> int:
    # quadratic DP; deliberately shares nothing with lis_length
    word = as_word(w)
    best = [1] * len(word)
    for j in range(len(word)):
        for i in range(j):
            if word[i] < word[j] and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best, default=0)


def is_in_C(w: Permutation | Sequence[int], s: int) -> bool:
    word = as_word(w)
    head = word[: len(word) - s]
    return all(head[i] < head[i + 1] for i in range(len(head) - 1))


def is_in_Pi(w: Permutation | Sequence[int], k: int) -> bool:
    word = as_word(w)
    return is_in_C(word, k) and lis_length(word) == len(word) - k


def _check_params(n: int, s: int, name: str) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not 0 <= s <= n:
        raise ValueError(f"{name} must satisfy 0 <= {name} <= n, got {name}={s}, n={n}")


def enumerate_Sn(n: int, cap: int | None = None) -> Iterator[Permutation]:
    check_cap(n, cap)
    for word in permutations(range(1, n + 1)):
        yield Permutation(word)


def enumerate_C(n: int, s: int, cap: int | None = None) -> Iterator[Permutation]:
    """All of ``C(n, s)`` in lexicographic order, built without filtering.

    The increasing head is a sorted choice of ``n - s`` values; the tail is
    any arrangement of the rest. Combinations and permutations both come out
    of itertools in lexicographic order, so the words do too.
    """
    _check_params(n, s, "s")
    check_cap(n, cap)
    values = range(1, n + 1)
    for head in combinations(values, n - s):
        chosen = set(head)
        rest = [v for v in values if v not in chosen]
        for tail in permutations(rest):
            yield Permutation(head + tail)


def enumerate_Pi(n: int, k: int, cap: int | None = None) -> Iterator[Permutation]:
    for w in enumerate_C(n, k, cap):
        if lis_length(w.word) == n - k:
            yield w

