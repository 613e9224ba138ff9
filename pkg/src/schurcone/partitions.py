"""Integer partitions, multisets of partitions and the predicates built on them.

Partitions are immutable tuples with trailing zeros stripped; multisets of
partitions are tuples of partitions in descending lexicographic order, so
equality and hashing of multisets is plain tuple equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence


class PartitionError(ValueError):
    pass


class GradingError(PartitionError):
    """Raised when two partitions of different weight are compared."""


class BumpUndefined(PartitionError):
    """Raised when ``bump(lam, rho)`` has no valid pair of positions."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Zeros anywhere in the input are dropped. Any other violation of the
    ordering raises :class:`PartitionError`.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise PartitionError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self) or ''})"


EMPTY = Partition()


class PartitionMultiset(tuple):
    """An unordered multiset of partitions, stored sorted descending.

    Empty partitions are not valid entries and are dropped, so that a factor
    ``s_()`` = 1 never changes the product it belongs to.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[Iterable[int]] = ()) -> "PartitionMultiset":
        parts = [e if isinstance(e, Partition) else Partition(e) for e in entries]
        parts = [p for p in parts if p]
        parts.sort(reverse=True)
        return super().__new__(cls, parts)

    @property
    def total_weight(self) -> int:
        return sum(p.weight for p in self)

    @property
    def max_parts(self) -> int:
        return max((len(p) for p in self), default=0)

    def union(self, *others: Iterable[Iterable[int]]) -> "PartitionMultiset":
        return PartitionMultiset(itertools.chain(self, *others))

    def multiplicity(self, entry: Sequence[int]) -> int:
        return tuple.count(self, Partition(entry))

    def __repr__(self) -> str:
        return f"PartitionMultiset({format_multiset(self)!r})"


# --- text formats -------------------------------------------------------


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return EMPTY
    try:
        return Partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise PartitionError(f"bad partition text {text!r}: {exc}") from None


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def parse_multiset(text: str) -> PartitionMultiset:
    text = text.strip()
    if not text:
        return PartitionMultiset()
    return PartitionMultiset(parse_partition(t) for t in text.split("|"))


def format_multiset(A: Iterable[Sequence[int]]) -> str:
    return "|".join(format_partition(p) for p in A)


# --- dominance and concatenation ---------------------------------------


def dominates(lhs: Sequence[int], rhs: Sequence[int]) -> bool:
    """True iff every prefix sum of ``lhs`` is at least that of ``rhs``."""
    if sum(lhs) != sum(rhs):
        raise GradingError(f"cannot compare {tuple(lhs)} and {tuple(rhs)}: weights differ")
    a = b = 0
    for i in range(max(len(lhs), len(rhs))):
        a += lhs[i] if i < len(lhs) else 0
        b += rhs[i] if i < len(rhs) else 0
        if a < b:
            return False
    return True


def phi(A: Iterable[Sequence[int]]) -> Partition:
    """Concatenate all parts of all entries of ``A`` into one partition."""
    return Partition(sorted((p for lam in A for p in lam), reverse=True))


# --- the bump operations -----------------------------------------------


def bump(lam: Sequence[int], rho: Sequence[int]) -> Partition:
    """Move one unit from the last occurrence of ``rho[1]`` to the first of ``rho[0]``."""
    if len(rho) != 2:
        raise BumpUndefined(f"rho must have exactly two parts, got {tuple(rho)}")
    r1, r2 = rho
    lam = list(lam)
    try:
        i = lam.index(r1)
        j = len(lam) - 1 - lam[::-1].index(r2)
    except ValueError:
        raise BumpUndefined(f"{tuple(lam)}[{tuple(rho)}]: part missing") from None
    if i >= j:
        raise BumpUndefined(f"{tuple(lam)}[{tuple(rho)}]: no positions i < j")
    lam[i] += 1
    lam[j] -= 1
    return Partition(lam)


def bump_iter(lam: Sequence[int], p: int, k: int) -> Optional[Partition]:
    """``lam[(p,p)^k]``, or None when some stage has fewer than two p's."""
    cur = Partition(lam)
    for _ in range(k):
        if cur.count(p) < 2:
            return None
        cur = bump(cur, (p, p))
    return cur


def leq_p(x: Sequence[int], y: Sequence[int], p: int) -> bool:
    """True iff ``x`` is dominated by ``y[(p,p)^k]`` for some k >= 0."""
    if sum(x) != sum(y):
        raise GradingError(f"cannot compare {tuple(x)} and {tuple(y)}: weights differ")
    cap = Partition(y).count(p) // 2 + 1
    for k in range(cap + 1):
        z = bump_iter(y, p, k)
        if z is None:
            return False
        if dominates(z, x):
            return True
    return False


# --- counting and enumeration ------------------------------------------


def hook_lengths(lam: Sequence[int]) -> list[int]:
    conj = Partition(lam).conjugate()
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def syt_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` by the hook-length formula."""
    lam = Partition(lam)
    if not lam:
        raise PartitionError("syt_count needs a nonempty shape")
    denom = 1
    for h in hook_lengths(lam):
        denom *= h
    count, rem = divmod(factorial(lam.weight), denom)
    assert rem == 0
    return count


def _partitions(n: int, max_part: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_parts - 1):
            yield (first,) + rest


def enumerate_partitions(N: int, max_parts: Optional[int] = None) -> list[Partition]:
    """All partitions of ``N`` with at most ``max_parts`` parts, descending lex."""
    if N < 0:
        return []
    bound = N if max_parts is None else max_parts
    return [Partition(p) for p in _partitions(N, N, bound)]


def enumerate_generators(N: int, k: int) -> list[PartitionMultiset]:
    """All multisets of partitions with at most ``k`` parts and total weight ``N``.

    The result is sorted descending by the canonical tuple of entries.
    """
    pool = [lam for w in range(N, 0, -1) for lam in enumerate_partitions(w, k)]
    pool.sort(reverse=True)
    out: list[PartitionMultiset] = []

    def rec(start: int, remaining: int, chosen: list[Partition]) -> None:
        if remaining == 0:
            out.append(PartitionMultiset(chosen))
            return
        for idx in range(start, len(pool)):
            lam = pool[idx]
            if lam.weight <= remaining:
                chosen.append(lam)
                rec(idx, remaining - lam.weight, chosen)
                chosen.pop()

    if N > 0:
        rec(0, N, [])
    else:
        out.append(PartitionMultiset())
    out.sort(reverse=True)
    return out


# --- bad pairs and pairings --------------------------------------------


@dataclass(frozen=True)
class BadPairReport:
    violations: tuple[tuple[tuple[int, int], str], ...] = field(default=())

    @property
    def is_nested(self) -> bool:
        return not self.violations

    def to_json(self, A: Optional[PartitionMultiset] = None) -> dict:
        out: dict = {
            "nested": self.is_nested,
            "violations": [
                {"entries": list(pair), "condition": label} for pair, label in self.violations
            ],
        }
        if A is not None:
            out["multiset"] = format_multiset(A)
            for v in out["violations"]:
                v["partitions"] = [format_partition(A[i]) for i in v["entries"]]
        return out


def _k2_bad_pair(lam: Partition, mu: Partition) -> Optional[str]:
    """Bad-pair label for an unordered pair of partitions with at most 2 parts."""
    for a, b in ((lam, mu), (mu, lam)):
        if len(a) == 2 and len(b) == 2 and a[0] > b[0] >= a[1] > b[1]:
            return "1"
        if len(a) == 2 and len(b) == 1 and a[0] > a[1] and a[0] >= b[0] >= a[1]:
            return "2"
    if len(lam) == 1 and len(mu) == 1:
        return "3"
    return None


def nested_report(A: Sequence[Sequence[int]]) -> BadPairReport:
    entries = [Partition(e) for e in A]
    for e in entries:
        if len(e) > 2:
            raise PartitionError(f"nestedness is defined for entries with <= 2 parts, got {e}")
    violations = []
    for i, j in itertools.combinations(range(len(entries)), 2):
        label = _k2_bad_pair(entries[i], entries[j])
        if label is not None:
            violations.append(((i, j), label))
    return BadPairReport(tuple(violations))


def is_nested(A: Sequence[Sequence[int]]) -> bool:
    return nested_report(A).is_nested


def _k3_case(lam: Partition, mu: Partition) -> Optional[str]:
    if len(lam) == 2 and len(mu) == 1:
        return "k3-1"
    if len(lam) == 3 and lam[2] == 1 and len(mu) == 1 and lam[0] > mu[0] >= lam[1]:
        return "k3-2"
    if len(lam) == 3 and len(mu) == 2 and lam[0] > mu[0] >= lam[1] > mu[1] >= lam[2]:
        return "k3-3"
    if len(lam) == 3 and len(mu) == 3 and lam[0] > mu[0] >= lam[1] > mu[1] >= lam[2] > mu[2]:
        return "k3-4"
    if len(lam) == 2 and len(mu) == 2 and lam[0] >= mu[0] >= mu[1] >= lam[1]:
        return "k3-5"
    return None


def k3_known_bad_pair(lam: Sequence[int], mu: Sequence[int]) -> Optional[str]:
    """Label of a listed bad-pair pattern for k = 3, or None.

    None means only that no listed pattern matches; the list is known to be
    incomplete, e.g. ``(5,2,1), (1,1)`` is bad but unlisted.
    """
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > 3 or len(mu) > 3:
        raise PartitionError("k3_known_bad_pair takes partitions with at most 3 parts")
    for a, b in ((lam, mu), (mu, lam)):
        label = _k3_case(a, b)
        if label is not None:
            return label
    if len(lam) <= 2 and len(mu) <= 2:
        label = _k2_bad_pair(lam, mu)
        if label is not None:
            return "k2-" + label
    return None


def _two_part_pairing(A: Sequence[Sequence[int]]) -> list[int]:
    entries = [Partition(e) for e in A]
    if any(len(e) != 2 for e in entries):
        raise PartitionError("pairings need every entry to have exactly two parts")
    return list(phi(entries))


def completely_separated(A: Sequence[Sequence[int]]) -> bool:
    lam = _two_part_pairing(A)
    pairing = PartitionMultiset(lam[i : i + 2] for i in range(0, len(lam), 2))
    return pairing == PartitionMultiset(A)


def completely_nested(A: Sequence[Sequence[int]]) -> bool:
    lam = _two_part_pairing(A)
    ell = len(lam) // 2
    pairing = PartitionMultiset((lam[i], lam[-1 - i]) for i in range(ell))
    return pairing == PartitionMultiset(A)


def generators_with_phi(lam: Sequence[int], k: int) -> list[PartitionMultiset]:
    """All multisets of partitions with at most ``k`` parts whose ``phi`` is ``lam``."""
    lam = Partition(lam)
    found: set[PartitionMultiset] = set()

    def rec(remaining: tuple[int, ...], chosen: list[Partition]) -> None:
        if not remaining:
            found.add(PartitionMultiset(chosen))
            return
        first, rest = remaining[0], remaining[1:]
        seen = set()
        for size in range(0, min(k - 1, len(rest)) + 1):
            for idx in itertools.combinations(range(len(rest)), size):
                extra = tuple(rest[i] for i in idx)
                if extra in seen:
                    continue
                seen.add(extra)
                left = tuple(v for i, v in enumerate(rest) if i not in idx)
                chosen.append(Partition((first,) + extra))
                rec(left, chosen)
                chosen.pop()

    rec(tuple(lam), [])
    return sorted(found, reverse=True)
