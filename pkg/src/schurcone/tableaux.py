"""Semistandard and standard Young tableaux: enumeration, reading words, Kostka numbers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .partitions import GradingError, Partition, PartitionError


@dataclass(frozen=True)
class Tableau:
    """A semistandard filling of a Young diagram; checked at construction."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise PartitionError(f"rows {self.rows} do not fit shape {tuple(self.shape)}")
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if v < 1:
                    raise PartitionError("tableau entries must be positive")
                if c and row[c - 1] > v:
                    raise PartitionError(f"row {r} is not weakly increasing: {row}")
                if r and self.rows[r - 1][c] >= v:
                    raise PartitionError(f"column {c} is not strictly increasing")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        rows = tuple(tuple(r) for r in rows if r)
        return cls(Partition(len(r) for r in rows), rows)

    def content(self) -> Counter:
        return Counter(v for row in self.rows for v in row)

    def is_standard(self) -> bool:
        n = self.shape.weight
        return sorted(v for row in self.rows for v in row) == list(range(1, n + 1))


def reading_word(T: Tableau) -> tuple[int, ...]:
    """Rows read right to left, top row first."""
    return tuple(v for row in T.rows for v in reversed(row))


def is_yamanouchi(word: Sequence[int], alphabet: Iterable[int] | None = None) -> bool:
    """Lattice-word test, optionally after restricting to ``alphabet``.

    The letters of ``alphabet`` are relabelled 1..m in increasing order
    before checking prefixes, so the test is about relative order only.
    """
    if alphabet is None:
        letters = list(range(1, max(word, default=0) + 1))
    else:
        letters = sorted(set(alphabet))
    rank = {v: i for i, v in enumerate(letters)}
    counts = [0] * len(letters)
    for v in word:
        r = rank.get(v)
        if r is None:
            continue
        counts[r] += 1
        if r and counts[r] > counts[r - 1]:
            return False
    return True


def enumerate_ssyt(shape: Sequence[int], content: Sequence[int]) -> Iterator[Tableau]:
    """All SSYT of ``shape`` with exactly ``content[v-1]`` copies of ``v``.

    Cells are filled in row-major order, smallest feasible letter first.
    ``content`` may be any composition.
    """
    shape = Partition(shape)
    content = list(content)
    if sum(content) != shape.weight:
        return
    m = len(content)
    rows = [[0] * n for n in shape]
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    remaining = content[:]

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(shape, tuple(tuple(r) for r in rows))
            return
        r, c = cells[idx]
        lo = rows[r][c - 1] if c else 1
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, m + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                rows[r][c] = v
                yield from rec(idx + 1)
                remaining[v - 1] += 1
        rows[r][c] = 0

    yield from rec(0)


def enumerate_ssyt_bounded(shape: Sequence[int], max_entry: int) -> Iterator[Tableau]:
    """All SSYT of ``shape`` with entries in ``1..max_entry``."""
    shape = Partition(shape)
    rows = [[0] * n for n in shape]
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(shape, tuple(tuple(r) for r in rows))
            return
        r, c = cells[idx]
        lo = rows[r][c - 1] if c else 1
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        # the rest of the column still needs room below this cell
        hi = max_entry - (len([1 for n in shape[r + 1 :] if n > c]))
        for v in range(lo, hi + 1):
            rows[r][c] = v
            yield from rec(idx + 1)
        rows[r][c] = 0

    yield from rec(0)


def enumerate_syt(shape: Sequence[int]) -> Iterator[Tableau]:
    shape = Partition(shape)
    if not shape:
        raise PartitionError("enumerate_syt needs a nonempty shape")
    return enumerate_ssyt(shape, [1] * shape.weight)


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    return sum(1 for _ in enumerate_ssyt(shape, content))


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of ``shape`` with the given content.

    The count does not depend on the order of ``content``, so compositions
    are sorted into partitions first.
    """
    shape, content = Partition(shape), Partition(sorted(content, reverse=True))
    if shape.weight != content.weight:
        raise GradingError(f"kostka({tuple(shape)}, {tuple(content)}): weights differ")
    return _kostka(shape, tuple(content))
