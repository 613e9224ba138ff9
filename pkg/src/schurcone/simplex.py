"""Phase-1 simplex over exact rationals with Bland's rule.

Decides feasibility of ``M x = t, x >= 0`` for a nonnegative right-hand
side. The result carries either a feasible ``x`` or a vector ``y`` with
``y.t > 0`` and ``y.M_j <= 0`` for every column (a Farkas certificate).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

try:  # much faster rationals; results are converted back to Fraction
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction


@dataclass
class Phase1Result:
    feasible: bool
    x: Optional[list[Fraction]]
    y: Optional[list[Fraction]]
    pivots: int


def phase1(M: Sequence[Sequence[int]], t: Sequence[int], max_pivots: int = 100_000) -> Phase1Result:
    m = len(M)
    n = len(M[0]) if m else 0
    if any(v < 0 for v in t):
        raise ValueError("phase1 expects a nonnegative right-hand side")
    width = n + m
    rows: list[list[Fraction]] = []
    for i in range(m):
        row = [_rational(v) for v in M[i]] + [_rational(0)] * m
        row[n + i] = _rational(1)
        rows.append(row)
    rhs = [_rational(v) for v in t]
    basis = list(range(n, n + m))
    # reduced costs of the artificial-sum objective
    cost = [-sum(rows[i][j] for i in range(m)) for j in range(n)] + [_rational(0)] * m

    pivots = 0
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # cannot happen: the phase-1 objective is bounded below by 0
            raise ArithmeticError("phase-1 objective unbounded")
        pivot_row = rows[leave]
        a = pivot_row[enter]
        if a != 1:
            pivot_row[:] = [v / a for v in pivot_row]
            rhs[leave] /= a
        nz = [j for j in range(width) if pivot_row[j]]
        for i in range(m):
            if i == leave:
                continue
            f = rows[i][enter]
            if f:
                row = rows[i]
                for j in nz:
                    row[j] -= f * pivot_row[j]
                rhs[i] -= f * rhs[leave]
        f = cost[enter]
        for j in nz:
            cost[j] -= f * pivot_row[j]
        basis[leave] = enter
        pivots += 1
        if pivots > max_pivots:
            raise ArithmeticError("pivot limit exceeded")

    infeasibility = sum(rhs[i] for i, var in enumerate(basis) if var >= n)
    if infeasibility == 0:
        x = [Fraction(0)] * n
        for i, var in enumerate(basis):
            if var < n:
                x[var] = _fraction(rhs[i])
        return Phase1Result(True, x, None, pivots)
    y = [_fraction(1 - cost[n + i]) for i in range(m)]
    return Phase1Result(False, None, y, pivots)


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))
