"""Schur-basis arithmetic: Littlewood-Richardson coefficients of multi-factor
products, Schur expansions of ``s_A``, a monomial-basis oracle and a
Jacobi-Trudi check.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .partitions import (
    EMPTY,
    GradingError,
    Partition,
    PartitionMultiset,
    dominates,
    enumerate_partitions,
    format_partition,
    parse_partition,
    phi,
)
from .tableaux import enumerate_ssyt_bounded, kostka

ORACLE_BOUND = 8
JACOBI_TRUDI_BOUND = 10


class BoundExceeded(ValueError):
    pass


class SchurVector:
    """A homogeneous symmetric function of degree ``degree`` in the Schur basis.

    Coefficients are ints, or Fractions after scaling by a rational; zero
    coefficients are never stored.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Optional[Mapping[Sequence[int], Rational]] = None):
        self.degree = degree
        self.coeffs: dict[Partition, Rational] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.weight != degree:
                raise GradingError(f"{tuple(lam)} does not have weight {degree}")
            if c:
                self.coeffs[lam] = c

    def __getitem__(self, lam: Sequence[int]) -> Rational:
        return self.coeffs.get(Partition(lam), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other: "SchurVector") -> "SchurVector":
        return add_scaled(self, other, 1)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return add_scaled(self, other, -1)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def support(self) -> frozenset[Partition]:
        return frozenset(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def __repr__(self) -> str:
        body = ", ".join(f"({format_partition(lam)}): {c}" for lam, c in self.items())
        return f"SchurVector({self.degree}, {{{body}}})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": {format_partition(lam): str(c) for lam, c in self.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SchurVector":
        coeffs = {parse_partition(k): Fraction(v) for k, v in data["coeffs"].items()}
        return cls(int(data["degree"]), {k: _demote(v) for k, v in coeffs.items()})


def _demote(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def add_scaled(v: SchurVector, w: SchurVector, c: Rational) -> SchurVector:
    """``v + c*w`` with exact arithmetic."""
    if v.degree != w.degree:
        raise GradingError(f"degree mismatch: {v.degree} vs {w.degree}")
    out = dict(v.coeffs)
    for lam, x in w.coeffs.items():
        out[lam] = _demote(out.get(lam, 0) + c * x)
    return SchurVector(v.degree, out)


def coefficient(v: SchurVector, lam: Sequence[int]) -> Rational:
    return v[lam]


def schur(lam: Sequence[int]) -> SchurVector:
    lam = Partition(lam)
    return SchurVector(lam.weight, {lam: 1})


# --- generalized Littlewood-Richardson rule ----------------------------


def block_assignment(
    A: Iterable[Sequence[int]], rng: Optional[random.Random] = None
) -> tuple[Partition, tuple[tuple[int, ...], ...]]:
    """Sorted content ``phi(A)`` and the letters taken by each entry of ``A``.

    Parts are sorted descending; ties go by entry index, then position in the
    entry. With ``rng``, ties among equal parts are broken at random instead.

    Counting with these blocks (:func:`lr_multi_sorted`) is not a valid LR
    rule in general: it overcounts for e.g. ``{(2,1),(2),(2)}`` and
    ``{(3,1,1),(2),(2)}``. :func:`lr_multi` uses :func:`factor_blocks`.
    """
    A = PartitionMultiset(A)
    tagged = [(part, i, pos) for i, lam in enumerate(A) for pos, part in enumerate(lam)]
    if rng is None:
        tagged.sort(key=lambda t: (-t[0], t[1], t[2]))
    else:
        rng.shuffle(tagged)
        tagged.sort(key=lambda t: -t[0])
    blocks: list[list[int]] = [[] for _ in A]
    for letter, (_, i, _) in enumerate(tagged, start=1):
        blocks[i].append(letter)
    content = Partition(t[0] for t in tagged)
    return content, tuple(tuple(sorted(b)) for b in blocks)


def factor_blocks(A: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Content and blocks with each entry on its own run of consecutive letters.

    Entry i of the canonical order takes the next ``len(entry)`` letters, so
    the content is the concatenation of the entries (a composition). This is
    the iterated two-factor LR rule and is exact for every multiset.
    """
    A = PartitionMultiset(A)
    content: list[int] = []
    blocks = []
    for lam in A:
        start = len(content) + 1
        content.extend(lam)
        blocks.append(tuple(range(start, start + len(lam))))
    return tuple(content), tuple(blocks)


def count_lr_tableaux(
    shape: Sequence[int], content: Sequence[int], blocks: Sequence[Sequence[int]]
) -> int:
    """Number of SSYT of ``shape`` and ``content`` whose reading word is
    Yamanouchi on every block (letters relabelled in increasing order).

    Cells are filled in reading order (rows top to bottom, each row right to
    left), so the Yamanouchi conditions can be checked on every prefix.
    Counts are memoized at row starts: the rest of the filling depends only
    on the row above and the letter counts so far.
    """
    shape = Partition(shape)
    n = shape.weight
    if n != sum(content):
        return 0
    m = len(content)
    prev = [0] * (m + 1)
    for block in blocks:
        block = sorted(block)
        for a, b in zip(block, block[1:]):
            prev[b] = a

    order: list[tuple[int, int]] = []
    for r, length in enumerate(shape):
        for c in range(length - 1, -1, -1):
            order.append((r, c))
    index = {cell: i for i, cell in enumerate(order)}
    right = [index.get((r, c + 1), -1) for r, c in order]
    above = [index.get((r - 1, c), -1) for r, c in order]
    rows = [r for r, _ in order]
    # cells of the row above, for cells that open a row
    row_above: dict[int, tuple[int, int]] = {}
    start = 0
    for r, length in enumerate(shape):
        if r:
            row_above[start] = (start - shape[r - 1], start)
        start += length

    fill = [0] * n
    cnt = [0] * (m + 1)
    cap = [0] + list(content)
    memo: dict[tuple, int] = {}

    def rec(idx: int) -> int:
        if idx == n:
            return 1
        key = None
        span = row_above.get(idx)
        if span is not None:
            key = (idx, tuple(fill[span[0] : span[1]]), tuple(cnt))
            hit = memo.get(key)
            if hit is not None:
                return hit
        hi = fill[right[idx]] if right[idx] >= 0 else m
        a = above[idx]
        lo = fill[a] + 1 if a >= 0 else 1
        if lo < rows[idx] + 1:
            lo = rows[idx] + 1
        total = 0
        for v in range(lo, hi + 1):
            if cnt[v] < cap[v]:
                p = prev[v]
                if p and cnt[v] >= cnt[p]:
                    continue
                cnt[v] += 1
                fill[idx] = v
                total += rec(idx + 1)
                cnt[v] -= 1
        if key is not None:
            memo[key] = total
        return total

    return rec(0)


@lru_cache(maxsize=1 << 18)
def _lr_multi(A: PartitionMultiset, lam: Partition) -> int:
    if not dominates(lam, phi(A)):
        return 0
    content, blocks = factor_blocks(A)
    return count_lr_tableaux(lam, content, blocks)


def lr_multi(A: Iterable[Sequence[int]], lam: Sequence[int]) -> int:
    """The coefficient of ``s_lam`` in ``prod(s_mu for mu in A)``."""
    A, lam = PartitionMultiset(A), Partition(lam)
    if lam.weight != A.total_weight:
        raise GradingError(f"|{tuple(lam)}| != total weight {A.total_weight}")
    return _lr_multi(A, lam)


def lr_multi_sorted(
    A: Iterable[Sequence[int]], lam: Sequence[int], rng: Optional[random.Random] = None
) -> int:
    """Tableau count with sorted content and :func:`block_assignment` blocks."""
    A, lam = PartitionMultiset(A), Partition(lam)
    if lam.weight != A.total_weight:
        raise GradingError(f"|{tuple(lam)}| != total weight {A.total_weight}")
    content, blocks = block_assignment(A, rng)
    return count_lr_tableaux(lam, content, blocks)


def skew_lr_count(outer: Sequence[int], inner: Sequence[int], mu: Sequence[int]) -> int:
    """Number of LR fillings of the skew shape ``outer/inner`` with content ``mu``.

    A filling is semistandard with a Yamanouchi reading word; the count is
    the coefficient of ``s_outer`` in ``s_inner * s_mu``.
    """
    return _skew_lr_count(Partition(outer), Partition(inner), Partition(mu))


@lru_cache(maxsize=1 << 18)
def _skew_lr_count(outer: Partition, inner: Partition, mu: Partition) -> int:
    if outer.weight != inner.weight + mu.weight or len(inner) > len(outer):
        return 0
    if any(a < b for a, b in zip(outer, inner)):
        return 0
    m = len(mu)
    inner_at = list(inner) + [0] * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner_at[r] - 1, -1)]
    index = {cell: i for i, cell in enumerate(cells)}
    right = [index.get((r, c + 1), -1) for r, c in cells]
    above = [index.get((r - 1, c), -1) for r, c in cells]
    fill = [0] * len(cells)
    cnt = [0] * (m + 1)
    cap = [0] + list(mu)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        hi = fill[right[idx]] if right[idx] >= 0 else m
        lo = fill[above[idx]] + 1 if above[idx] >= 0 else 1
        total = 0
        for v in range(lo, hi + 1):
            if cnt[v] < cap[v] and (v == 1 or cnt[v] < cnt[v - 1]):
                cnt[v] += 1
                fill[idx] = v
                total += rec(idx + 1)
                cnt[v] -= 1
        return total

    return rec(0)


def _shapes_containing(inner: Partition, add: int, max_len: int, max_first: int) -> Iterator[Partition]:
    """Partitions ``outer`` containing ``inner`` with ``add`` more cells."""
    inner_at = list(inner) + [0] * (max_len - len(inner))
    parts = [0] * max_len

    def rec(r: int, left: int, ceiling: int) -> Iterator[Partition]:
        if r == max_len:
            if left == 0:
                yield Partition(parts)
            return
        for size in range(min(ceiling, inner_at[r] + left), inner_at[r] - 1, -1):
            parts[r] = size
            yield from rec(r + 1, left - (size - inner_at[r]), size)
        parts[r] = 0

    yield from rec(0, add, max_first)


@lru_cache(maxsize=1 << 16)
def _two_factor(nu: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    first = (nu[0] if nu else 0) + (mu[0] if mu else 0)
    for outer in _shapes_containing(nu, mu.weight, len(nu) + len(mu), first):
        c = _skew_lr_count(outer, nu, mu)
        if c:
            out.append((outer, c))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _expand_product(A: PartitionMultiset) -> SchurVector:
    if not A:
        return SchurVector(0, {EMPTY: 1})
    if len(A) == 1:
        return SchurVector(A.total_weight, {A[0]: 1})
    # peel off the smallest entry; the rest is shared with many other multisets
    rest, mu = _expand_product(PartitionMultiset(A[:-1])), A[-1]
    coeffs: dict[Partition, int] = {}
    for nu, a in rest.coeffs.items():
        for lam, c in _two_factor(nu, mu):
            coeffs[lam] = coeffs.get(lam, 0) + a * c
    return SchurVector(A.total_weight, coeffs)


def expand_product(A: Iterable[Sequence[int]]) -> SchurVector:
    """Schur expansion of ``s_A``, built one factor at a time.

    Multiplying by each entry uses skew LR counts, which is the consecutive
    block rule of :func:`lr_multi` split at block boundaries. The empty
    multiset gives the constant 1 in degree 0.
    """
    return _expand_product(PartitionMultiset(A))


def product(*factors: Sequence[int]) -> SchurVector:
    """``s_f1 * s_f2 * ...``; empty partitions act as the unit."""
    return expand_product(factors)


def lr_convolve(v: SchurVector, w: SchurVector) -> SchurVector:
    """Product of two Schur vectors via two-factor LR coefficients."""
    out: dict[Partition, Rational] = {}
    for mu, a in v.coeffs.items():
        for nu, b in w.coeffs.items():
            for lam, c in expand_product((mu, nu)).coeffs.items():
                out[lam] = out.get(lam, 0) + a * b * c
    return SchurVector(v.degree + w.degree, out)


# --- monomial-basis oracle ---------------------------------------------


def _schur_polynomial(lam: Partition, nvars: int) -> dict[tuple[int, ...], int]:
    poly: dict[tuple[int, ...], int] = {}
    for T in enumerate_ssyt_bounded(lam, nvars):
        exps = [0] * nvars
        for row in T.rows:
            for v in row:
                exps[v - 1] += 1
        key = tuple(exps)
        poly[key] = poly.get(key, 0) + 1
    return poly


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for a, x in f.items():
        for b, y in g.items():
            key = tuple(i + j for i, j in zip(a, b))
            out[key] = out.get(key, 0) + x * y
    return out


def expand_product_oracle(A: Iterable[Sequence[int]], bound: int = ORACLE_BOUND) -> SchurVector:
    """Schur expansion of ``s_A`` computed through explicit polynomials.

    Each factor is expanded as a polynomial in N variables from its SSYT,
    the polynomials are multiplied, and the monomial coefficients are turned
    into Schur coefficients by back-substitution against the Kostka matrix.
    """
    A = PartitionMultiset(A)
    N = A.total_weight
    if N > bound:
        raise BoundExceeded(f"oracle degree {N} exceeds bound {bound}")
    poly: dict[tuple[int, ...], int] = {(0,) * N: 1}
    for lam in A:
        poly = _poly_mul(poly, _schur_polynomial(lam, N))
    coeffs: dict[Partition, int] = {}
    # descending lex order refines dominance, so every lam above mu is done
    for mu in enumerate_partitions(N):
        key = tuple(mu) + (0,) * (N - len(mu))
        c = poly.get(key, 0) - sum(x * kostka(lam, mu) for lam, x in coeffs.items())
        if c:
            coeffs[mu] = c
    return SchurVector(N, coeffs)


# --- Jacobi-Trudi ------------------------------------------------------


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def h_to_schur(mu: Sequence[int]) -> SchurVector:
    """``h_mu`` in the Schur basis: the coefficient of ``s_lam`` is ``K_{lam,mu}``."""
    mu = Partition(sorted(mu, reverse=True))
    N = mu.weight
    return SchurVector(N, {lam: kostka(lam, mu) for lam in enumerate_partitions(N)})


def jacobi_trudi_expansion(lam: Sequence[int], bound: int = JACOBI_TRUDI_BOUND) -> SchurVector:
    """``det(h_{lam_i + j - i})`` expanded in the Schur basis."""
    lam = Partition(lam)
    N = lam.weight
    if N > bound:
        raise BoundExceeded(f"Jacobi-Trudi degree {N} exceeds bound {bound}")
    k = len(lam)
    total = SchurVector(N)
    for perm in itertools.permutations(range(k)):
        idx = [lam[i] + perm[i] - i for i in range(k)]
        if min(idx, default=0) < 0:
            continue
        total = add_scaled(total, h_to_schur(idx), _perm_sign(perm))
    return total


def jacobi_trudi_check(lam: Sequence[int], bound: int = JACOBI_TRUDI_BOUND) -> bool:
    return jacobi_trudi_expansion(lam, bound) == schur(lam)
