"""Integer partitions: enumeration, counting, and partial sums.

A partition is an ascending tuple of positive parts, e.g. (1, 1, 3) for
1 + 1 + 3 = 5. Ascending tuples double as monomial descriptions elsewhere in
the package: the partition (1, 1, 3) names the monomial x1^2*x3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True, slots=True)
class Partition:
    """An integer partition, stored as an ascending tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive integers: {self.parts!r}")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be ascending: {self.parts!r}")

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def weight(self) -> int:
        """Sum of parts."""
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part to its number of occurrences."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _descending_partitions(k: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of k as descending tuples with parts <= max_part,
    in descending lexicographic order: (k,) first, (1,)*k last."""
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in _descending_partitions(k - first, first):
            yield (first,) + rest


def partitions_of(k: int) -> list[Partition]:
    """All partitions of k, as ascending tuples.

    The order is graded reverse-lexicographic on the descending form, so the
    all-ones partition comes first and the single-part partition last:
    partitions_of(3) lists (1,1,1), (1,2), (3). k = 0 gives the empty
    partition only.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative: {k}")
    descending = list(_descending_partitions(k, k))
    descending.reverse()
    return [Partition(tuple(reversed(d))) for d in descending]


def partitions_with_length(n: int, k: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Partitions of n into exactly k parts >= min_part, as ascending tuples,
    in ascending lexicographic order."""
    if k == 0:
        if n == 0:
            yield ()
        return
    # the smallest part can be at most n // k, or the remaining k-1 parts
    # could not all reach it
    for p in range(min_part, n // k + 1):
        for rest in partitions_with_length(n - p, k - 1, p):
            yield (p,) + rest


@lru_cache(maxsize=None)
def _count_with_length(n: int, k: int) -> int:
    # PF(n, k) = PF(n-1, k-1) + PF(n-k, k): split on whether a part equals 1
    if k == 0:
        return 1 if n == 0 else 0
    if n < k:
        return 0
    return _count_with_length(n - 1, k - 1) + _count_with_length(n - k, k)


def count_partitions(n: int, k: int | None = None) -> int:
    """PF(n), or PF(n, k) when k is given: the number of partitions of n,
    optionally into exactly k parts. k > n gives 0."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    if k is None:
        return sum(_count_with_length(n, j) for j in range(1, n + 1))
    if k < 1:
        raise ValueError(f"k must be positive: {k}")
    return _count_with_length(n, k)


def pfs(n: int) -> int:
    """Partial sum PF(1) + PF(2) + ... + PF(n) of the partition function."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return sum(count_partitions(v) for v in range(1, n + 1))
