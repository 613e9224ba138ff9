"""Extreme-ray membership in the (N,k)-Schur cone by exact linear programming.

``s_A`` is extreme iff the system ``sum_B c_B s_B = s_A, c >= 0`` over all
other generators ``B != A`` is infeasible. Every answer comes with a
certificate that is re-checked in exact arithmetic before it is returned.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .partitions import (
    Partition,
    PartitionError,
    PartitionMultiset,
    enumerate_generators,
    format_multiset,
    format_partition,
    is_nested,
)
from .schur import BoundExceeded, SchurVector, expand_product
from .simplex import phase1

log = logging.getLogger(__name__)

EXTREME_BOUND = 10
# count_extreme default degree bound per k; k >= 3 shares the last entry
COUNT_BOUNDS = {1: 10, 2: 10, 3: 9}


class CertificateError(AssertionError):
    """A certificate failed exact re-verification."""


@dataclass
class ExtremalityCertificate:
    kind: str  # "witness" or "farkas"
    witness: dict[PartitionMultiset, Fraction] = field(default_factory=dict)
    farkas: dict[Partition, Fraction] = field(default_factory=dict)
    collisions: list[PartitionMultiset] = field(default_factory=list)

    @property
    def extreme(self) -> bool:
        return self.kind == "farkas"

    def to_json(self) -> dict:
        if self.kind == "witness":
            entries = {format_multiset(B): _frac(c) for B, c in sorted(self.witness.items(), reverse=True)}
        else:
            entries = {format_partition(lam): _frac(c) for lam, c in sorted(self.farkas.items(), reverse=True)}
        out = {"extreme": self.extreme, "certificate": {"kind": self.kind, "entries": entries}}
        if self.collisions:
            out["collisions"] = [format_multiset(B) for B in self.collisions]
        return out


def _frac(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


@dataclass
class ConeInstance:
    degree: int
    k: int
    target_multiset: PartitionMultiset
    target: SchurVector
    columns: list[tuple[PartitionMultiset, SchurVector]]


@lru_cache(maxsize=64)
def _generators(N: int, k: int) -> tuple[PartitionMultiset, ...]:
    return tuple(enumerate_generators(N, k))


def build_instance(A: Iterable[Sequence[int]], k: int) -> ConeInstance:
    A = PartitionMultiset(A)
    if A.max_parts > k:
        raise PartitionError(f"{format_multiset(A)} has an entry with more than {k} parts")
    N = A.total_weight
    columns = [(B, expand_product(B)) for B in _generators(N, k) if B != A]
    return ConeInstance(N, k, A, expand_product(A), columns)


def _dot(y: dict[Partition, Fraction], v: SchurVector) -> Fraction:
    return sum((y.get(lam, 0) * c for lam, c in v.coeffs.items()), Fraction(0))


def solve_feasibility(instance: ConeInstance, prune: bool = True) -> ExtremalityCertificate:
    """Decide whether the target lies in the cone of the columns.

    With ``prune``, columns whose Schur support leaves the target's support
    are dropped first: all entries are nonnegative, so such columns must
    get coefficient 0 in any solution.
    """
    target = instance.target
    collisions = [B for B, v in instance.columns if v == target]
    if collisions:
        log.warning(
            "vector collision: s_{%s} equals s_{%s}",
            format_multiset(instance.target_multiset),
            ", ".join(format_multiset(B) for B in collisions),
        )
        return ExtremalityCertificate("witness", {collisions[0]: Fraction(1)}, collisions=collisions)

    support = target.support()
    if prune:
        kept = [(B, v) for B, v in instance.columns if v.support() <= support]
        rows = sorted(support, reverse=True)
    else:
        kept = list(instance.columns)
        rows = sorted(set(support).union(*(v.support() for _, v in kept)), reverse=True)

    if kept:
        M = [[v[lam] for _, v in kept] for lam in rows]
        result = phase1(M, [target[lam] for lam in rows])
        if result.feasible:
            witness = {B: c for (B, _), c in zip(kept, result.x) if c}
            return ExtremalityCertificate("witness", witness)
        y = {lam: c for lam, c in zip(rows, result.y)}
    else:
        y = {lam: Fraction(1) for lam in rows}

    # rows outside the target support get a penalty large enough to make
    # every dropped column nonpositive
    kept_ids = {B for B, _ in kept}
    penalty = Fraction(0)
    for B, v in instance.columns:
        if B not in kept_ids:
            penalty = max(penalty, sum((max(y.get(lam, 0), 0) * c for lam, c in v.coeffs.items()), Fraction(0)))
    for B, v in instance.columns:
        if B not in kept_ids:
            for lam in v.coeffs:
                if lam not in support:
                    y[lam] = -penalty
    return ExtremalityCertificate("farkas", farkas={lam: c for lam, c in y.items() if c})


def check_certificate(instance: ConeInstance, cert: ExtremalityCertificate) -> None:
    """Raise :class:`CertificateError` unless ``cert`` is exactly valid for ``instance``."""
    if cert.kind == "witness":
        columns = dict(instance.columns)
        if not cert.witness or any(c < 0 for c in cert.witness.values()):
            raise CertificateError("witness must be nonnegative and nonempty")
        if not any(c > 0 for c in cert.witness.values()):
            raise CertificateError("witness has no positive coefficient")
        total = SchurVector(instance.degree)
        for B, c in cert.witness.items():
            if B not in columns:
                raise CertificateError(f"witness uses {format_multiset(B)}, not a column")
            for lam, x in columns[B].coeffs.items():
                total.coeffs[lam] = total.coeffs.get(lam, 0) + c * x
        total = SchurVector(instance.degree, total.coeffs)
        if total.coeffs != instance.target.coeffs:
            raise CertificateError("witness combination does not reproduce the target")
    elif cert.kind == "farkas":
        if _dot(cert.farkas, instance.target) <= 0:
            raise CertificateError("Farkas vector is not positive on the target")
        for B, v in instance.columns:
            if _dot(cert.farkas, v) > 0:
                raise CertificateError(f"Farkas vector is positive on {format_multiset(B)}")
    else:
        raise CertificateError(f"unknown certificate kind {cert.kind!r}")


def is_extreme(
    A: Iterable[Sequence[int]], k: int, bound: int = EXTREME_BOUND
) -> tuple[bool, ExtremalityCertificate]:
    A = PartitionMultiset(A)
    if A.total_weight > bound:
        raise BoundExceeded(f"degree {A.total_weight} exceeds bound {bound}")
    instance = build_instance(A, k)
    cert = solve_feasibility(instance)
    check_certificate(instance, cert)
    return cert.extreme, cert


def _count_bound(k: int) -> int:
    return COUNT_BOUNDS.get(k, COUNT_BOUNDS[max(COUNT_BOUNDS)])


def _extreme_flag(args: tuple[PartitionMultiset, int]) -> bool:
    A, k = args
    return is_extreme(A, k, bound=A.total_weight)[0]


def extreme_generators(
    N: int, k: int, jobs: int = 1, bound: Optional[int] = None
) -> list[PartitionMultiset]:
    """The extreme elements of ``SP_N^k`` in canonical order."""
    limit = _count_bound(k) if bound is None else bound
    if N > limit:
        raise BoundExceeded(f"degree {N} exceeds bound {limit} for k={k}")
    gens = _generators(N, k)
    tasks = [(A, k) for A in gens]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(_extreme_flag, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        flags = [_extreme_flag(t) for t in tasks]
    return [A for A, flag in zip(gens, flags) if flag]


def count_extreme(N: int, k: int, jobs: int = 1, bound: Optional[int] = None) -> int:
    return len(extreme_generators(N, k, jobs=jobs, bound=bound))


def count_extreme_combinatorial(N: int, k: int) -> int:
    """Extreme-ray count without linear programming, where it is known.

    Every generator is extreme for k = 1; for k = 2 this is the nested count,
    which relies on the extreme-iff-nested conjecture.
    """
    if k == 1:
        return len(_generators(N, 1))
    if k == 2:
        return count_nested(N)
    raise ValueError(f"no combinatorial count is available for k={k}")


def nested_generators(N: int) -> list[PartitionMultiset]:
    return [A for A in _generators(N, 2) if is_nested(A)]


def count_nested(N: int) -> int:
    return len(nested_generators(N))


def default_jobs() -> int:
    return os.cpu_count() or 1
