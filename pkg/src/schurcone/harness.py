"""Batch verification suites for the coefficient identities and extremality
statements about the Schur cone, plus counterexample searches for the open
conjectures and reproduction of the table of extreme-ray counts.

A violation of a proven statement is a FAILURE (a bug somewhere). A violation
of a conjecture is a FINDING (a candidate counterexample).
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass, field
from importlib import resources
from math import comb
from typing import Callable, Iterable, Optional, Sequence

from .cone import EXTREME_BOUND, count_extreme, extreme_generators, is_extreme, nested_generators
from .partitions import (
    Partition,
    PartitionError,
    PartitionMultiset,
    bump,
    bump_iter,
    completely_separated,
    dominates,
    enumerate_generators,
    enumerate_partitions,
    format_multiset,
    format_partition,
    generators_with_phi,
    is_nested,
    k3_known_bad_pair,
    phi,
)
from .schur import SchurVector, count_lr_tableaux, expand_product, factor_blocks, jacobi_trudi_check, lr_multi, product

log = logging.getLogger(__name__)

PROVEN, CONJECTURE = "proven", "conjecture"


@dataclass
class SuiteReport:
    suite_name: str
    kind: str = PROVEN
    cases_run: int = 0
    violations: list[tuple[str, object, object]] = field(default_factory=list)
    wall_time: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        if self.passed:
            return "pass"
        return "finding" if self.kind == CONJECTURE else "failure"

    def check(self, case: str, expected, actual) -> bool:
        self.cases_run += 1
        if expected != actual:
            self.violations.append((case, expected, actual))
            return False
        return True

    def to_json(self) -> dict:
        return {
            "suite": self.suite_name,
            "kind": self.kind,
            "status": self.status,
            "cases_run": self.cases_run,
            "violations": [
                {"case": case, "expected": _jsonable(exp), "actual": _jsonable(act)}
                for case, exp, act in self.violations
            ],
            "wall_time": round(self.wall_time, 3),
            "notes": {k: _jsonable(v) for k, v in self.notes.items()},
        }


def _jsonable(value):
    if isinstance(value, SchurVector):
        return value.to_json()
    if isinstance(value, PartitionMultiset):
        return format_multiset(value)
    if isinstance(value, Partition):
        return format_partition(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in value.items()}
    return value


# --- ordering and comparison helpers -----------------------------------


def inside_out_order(A: Iterable[Sequence[int]]) -> list[Partition]:
    """Order the pairs of a nested multiset so each is adjacent in what remains.

    At every step the pair ``(mu_i, mu_{i+1})`` with the smallest ``i`` among
    pairs still present is removed, where ``mu`` is ``phi`` of the remainder.
    """
    A = PartitionMultiset(A)
    if any(len(lam) != 2 for lam in A):
        raise PartitionError("inside-out order needs every entry to have exactly two parts")
    if not is_nested(A):
        raise PartitionError(f"{format_multiset(A)} is not nested")
    remaining = list(A)
    order = []
    while remaining:
        mu = phi(remaining)
        for i in range(len(mu) - 1):
            pair = Partition((mu[i], mu[i + 1]))
            if pair in remaining:
                remaining.remove(pair)
                order.append(pair)
                break
        else:
            raise PartitionError(f"no adjacent pair left in {format_multiset(remaining)}")
    return order


def agree_within(A: Iterable[Sequence[int]], B: Iterable[Sequence[int]], rho: Sequence[int]) -> bool:
    """True iff every pair strictly inside ``rho`` occurs equally often in both."""
    rho = Partition(rho)
    if len(rho) != 2:
        raise PartitionError(f"agree_within needs a two-part rho, got {tuple(rho)}")
    A, B = PartitionMultiset(A), PartitionMultiset(B)
    inside = {mu for mu in itertools.chain(A, B) if len(mu) == 2 and rho[0] > mu[0] > mu[1] > rho[1]}
    return all(A.multiplicity(mu) == B.multiplicity(mu) for mu in inside)


def _binom(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0


def _fmt(A) -> str:
    return "{" + format_multiset(PartitionMultiset(A)) + "}"


# --- suites -------------------------------------------------------------


def suite_lr_corollary(report: SuiteReport, bound: int = 7, **_) -> None:
    """Nonnegativity, dominance support and unit leading coefficient of ``c_A``."""
    for N in range(1, bound + 1):
        for A in enumerate_generators(N, N):
            content, blocks = factor_blocks(A)
            bottom = phi(A)
            expansion = expand_product(A)
            for lam in enumerate_partitions(N):
                raw = count_lr_tableaux(lam, content, blocks)
                case = f"{_fmt(A)} at {format_partition(lam)}"
                report.check(case + ": nonnegative", True, raw >= 0)
                if raw:
                    report.check(case + ": dominates phi(A)", True, dominates(lam, bottom))
                report.check(case + ": expansion agrees", raw, expansion[lam])
            report.check(f"{_fmt(A)}: leading coefficient", 1, expansion[bottom])


def _distinct_part_shapes(max_weight: int) -> Iterable[Partition]:
    for N in range(1, max_weight + 1):
        for lam in enumerate_partitions(N):
            if len(set(lam)) == len(lam):
                yield lam


def suite_lemma15(report: SuiteReport, bound: int = 9, **_) -> None:
    """Removing a two-part entry rho lowers ``c^{lam[rho]}`` by one for distinct-part shapes."""
    orders = 0
    for lam in _distinct_part_shapes(bound):
        nested = [A for A in generators_with_phi(lam, 2) if is_nested(A)]
        for A in nested:
            if all(len(mu) == 2 for mu in A):
                inside_out_order(A)
                orders += 1
        for A, B in itertools.permutations(nested, 2):
            for rho in set(A):
                if len(rho) != 2 or rho in B or not agree_within(A, B, rho):
                    continue
                target = bump(lam, rho)
                cA, cB = lr_multi(A, target), lr_multi(B, target)
                case = f"lam={format_partition(lam)} rho={format_partition(rho)} A={_fmt(A)} B={_fmt(B)}"
                report.check(case + ": c_A + 1 = c_B", cA + 1, cB)
                i, j = lam.index(rho[0]), lam.index(rho[1])
                if j == i + 1:
                    report.check(case + ": adjacent (c_A, c_B)", (0, 1), (cA, cB))
    report.notes["inside_out_orders"] = orders


def _separated_shapes(max_weight: int) -> Iterable[tuple[int, int, Partition]]:
    """``(p, n, lam)`` with ``lam`` holding ``n >= 2`` copies of ``p`` and other parts distinct."""
    for p in range(1, max_weight // 2 + 1):
        for n in range(2, max_weight // p + 1):
            left = max_weight - n * p
            others = [v for v in range(1, left + 1) if v != p]
            for size in range(0, len(others) + 1):
                for extra in itertools.combinations(others, size):
                    if sum(extra) <= left:
                        yield p, n, Partition(sorted(extra + (p,) * n, reverse=True))


def _ladder(lam: Partition, p: int) -> list[Partition]:
    return [bump_iter(lam, p, j) for j in range(lam.count(p) // 2 + 1)]


def square_product_cases(max_weight: int) -> Iterable[tuple[str, list[int], list[int]]]:
    """``(case, expected, actual)``: ``s_rho * s_{mu[rho^i]}`` read off on the ladder ``lam[rho^j]``."""
    for p, n, lam in _separated_shapes(max_weight):
        m = n // 2
        ladder = _ladder(lam, p)
        mu = list(lam)
        mu.remove(p)
        mu.remove(p)
        mu = Partition(mu)
        for i in range(m):
            v = expand_product([(p, p), bump_iter(mu, p, i)])
            if i <= m - 2:
                expected = [1 if i <= j <= i + 2 else 0 for j in range(m + 1)]
            elif n % 2:
                expected = [1 if j in (m - 1, m) else 0 for j in range(m + 1)]
            else:
                expected = [1 if j == m - 1 else 0 for j in range(m + 1)]
            case = f"p={p} n={n} lam={format_partition(lam)} i={i}: (p,p) times mu[rho^i]"
            yield case, expected, [v[shape] for shape in ladder]


def binomial_law_cases(max_weight: int) -> Iterable[tuple[str, list[int], list[int]]]:
    """``(case, expected, actual)`` for every ``B`` without ``(p,p)`` and ``phi(B) = lam[rho^i]``."""
    for p, n, lam in _separated_shapes(max_weight):
        m = n // 2
        ladder = _ladder(lam, p)
        rho = Partition((p, p))
        for i in range(m + 1):
            expected = [_binom(n - 2 * i, j - i) - _binom(n - 2 * i, j - i - 1) for j in range(m + 1)]
            for B in generators_with_phi(ladder[i], 2):
                if rho in B:
                    continue
                v = expand_product(B)
                case = f"p={p} n={n} lam={format_partition(lam)} i={i} B={_fmt(B)}: binomial law"
                yield case, expected, [v[shape] for shape in ladder]


def suite_separated_claims(report: SuiteReport, bound: int = 12, **_) -> None:
    """Coefficient formulas behind adding a square ``(p,p)`` to an extreme multiset."""
    for case, expected, actual in itertools.chain(square_product_cases(bound), binomial_law_cases(bound)):
        report.check(case, expected, actual)


def suite_add_square(
    report: SuiteReport, bound: int = 6, max_p: int = 3, max_total: int = 10, corollary_bound: int = 8, jobs: int = 1, **_
) -> None:
    """Adding ``(p,p)`` keeps an extreme multiset extreme; completely separated nested ones are extreme."""
    for N in range(1, bound + 1):
        for A in extreme_generators(N, 2, jobs=jobs, bound=N):
            for p in range(1, max_p + 1):
                if N + 2 * p > max_total:
                    continue
                grown = A.union([(p, p)])
                report.check(f"{_fmt(A)} + ({p},{p}) extreme", True, is_extreme(grown, 2, bound=N + 2 * p)[0])
    for N in range(2, corollary_bound + 1, 2):
        for A in nested_generators(N):
            if all(len(mu) == 2 for mu in A) and completely_separated(A):
                report.check(f"{_fmt(A)} completely separated and nested, extreme", True, is_extreme(A, 2, bound=N)[0])


SQUARED_GRID = ((2, 1), (3, 1), (3, 2), (4, 2))


def squared_coefficients(j: int, i: int) -> dict[str, tuple[int, int]]:
    """The eight (expected, actual) coefficient pairs for ``A = {(j,i),(j,i)}``."""
    A = [(j, i), (j, i)]
    B = [
        [(j, j), (i, i)],
        [(j + 1, j - 1), (i, i)],
        [(j + 1, i), (j - 1, i)],
        [(j, j), (i + 1, i - 1)],
        [(j, i + 1), (j, i - 1)],
    ]
    lam = (j, j, i, i)
    low1, low2 = bump(lam, (j, j)), bump(lam, (i, i))
    plus = (j + 1, j, i, i - 1)
    out = {
        "c_A at lam[(j,j)] = c_B0 + 1": (lr_multi(B[0], low1) + 1, lr_multi(A, low1)),
        "c_A at lam[(i,i)] = c_B0 + 1": (lr_multi(B[0], low2) + 1, lr_multi(A, low2)),
        "c_A at lam+ = 2": (2, lr_multi(A, plus)),
    }
    for t, Bt in enumerate(B):
        out[f"c_B{t} at lam+ = 1"] = (1, lr_multi(Bt, plus))
    return out


def suite_squared(report: SuiteReport, grid: Sequence[tuple[int, int]] = SQUARED_GRID, **_) -> None:
    """Claimed coefficients for ``{(j,i),(j,i)}`` and its extremality."""
    for j, i in grid:
        if not j > i > 0:
            raise ValueError(f"need j > i > 0, got ({j},{i})")
        for label, (expected, actual) in squared_coefficients(j, i).items():
            report.check(f"(j,i)=({j},{i}): {label}", expected, actual)
        N = 2 * (j + i)
        report.check(f"(j,i)=({j},{i}): extreme", True, is_extreme([(j, i), (j, i)], 2, bound=N)[0])


def k3_identity_cases(max_weight: int) -> Iterable[tuple[str, tuple[int, ...], list, list[list]]]:
    """``(case, params, [lam, mu], rhs)`` for every tuple meeting a case's inequalities.

    ``rhs`` is a list of factor lists; each term is the product of its factors.
    """
    W = max_weight
    R = range(1, W + 1)
    for l1, l2, m1 in itertools.product(R, repeat=3):
        if l1 > m1 >= l2 and l1 + l2 + 1 + m1 <= W:
            yield "2", (l1, l2, m1), [(l1, l2, 1), (m1,)], [[(l1,), (m1, l2, 1)], [(l2 - 1,), (l1, m1 + 1, 1)]]
    for l1, l2, l3, m1, m2 in itertools.product(R, repeat=5):
        if l1 + l2 + l3 + m1 + m2 <= W and l1 > m1 >= l2 > m2 >= l3:
            yield "3", (l1, l2, l3, m1, m2), [(l1, l2, l3), (m1, m2)], [
                [(l2 - 1, m2), (l1, m1 + 1, l3)],
                [(m1, l2), (l1, m2, l3)],
                [(l1, l3 - 1), (m1, l2, m2 + 1)],
            ]
    for l1, l2, l3, m1, m2, m3 in itertools.product(R, repeat=6):
        if l1 + l2 + l3 + m1 + m2 + m3 <= W and l1 > m1 >= l2 > m2 >= l3 > m3:
            yield "4", (l1, l2, l3, m1, m2, m3), [(l1, l2, l3), (m1, m2, m3)], [
                [(l1, m1 + 1, l2 + 1), (m2 - 1, l3 - 1, m3)],
                [(l1, l2, m3), (m1, m2, l3)],
                [(l1, l2, m2 + 1), (m1, l3 - 1, m3)],
            ]
    for l1, l2, m1, m2 in itertools.product(R, repeat=4):
        if l1 + l2 + m1 + m2 > W or not l1 >= m1 >= m2 >= l2:
            continue
        if m1 > l2:
            yield "5a", (l1, l2, m1, m2), [(l1, l2), (m1, m2)], [
                [(l1, m1, m2), (l2,)],
                [(l1 + 1, m2), (m1 - 1, l2)],
                [(l1 + 1, l2 + 1), (m1 - 1, m2 - 1)],
            ]
        elif m1 == l2 == m2:
            yield "5b", (l1, l2, m1, m2), [(l1, l2), (m1, m2)], [
                [(l1, l2, l2), (l2,)],
                [(l1 + 1, l2 + 1), (l2 - 1, l2 - 1)],
            ]


def suite_k3_identities(report: SuiteReport, bound: int = 12, support_bound: int = 10, lp_bound: int = 8, **_) -> None:
    """Decompositions showing the listed k = 3 pairs are bad, plus the worked counterexample pair."""
    case_counts: dict[str, int] = {}
    for case, params, pair, terms in k3_identity_cases(bound):
        case_counts[case] = case_counts.get(case, 0) + 1
        lhs = product(*pair)
        rhs = SchurVector(lhs.degree)
        for factors in terms:
            rhs = rhs + product(*factors)
        report.check(f"case {case} params={params}", lhs, rhs)
    # case 1: a two-part times a one-part partition stays within three rows
    R = range(1, support_bound + 1)
    for l1, l2, m1 in itertools.product(R, repeat=3):
        if l1 >= l2 and l1 + l2 + m1 <= support_bound:
            rows = max(len(lam) for lam in product((l1, l2), (m1,)).support())
            report.check(f"case 1 ({l1},{l2})x({m1}): rows <= 3", True, rows <= 3)
            case_counts["1"] = case_counts.get("1", 0) + 1
    # every listed pair is non-extreme in the k = 3 cone
    for N in range(2, lp_bound + 1):
        for A in enumerate_generators(N, 3):
            if len(A) == 2 and k3_known_bad_pair(A[0], A[1]) is not None:
                report.check(f"listed pair {_fmt(A)} not extreme at k=3", False, is_extreme(A, 3, bound=N)[0])
    remark = product((5, 2, 1), (1, 1))
    report.check("s(5,2,1)s(1,1) = s(1,1,1)s(5,2) + s(5,2,2)s(1)", remark, product((1, 1, 1), (5, 2)) + product((5, 2, 2), (1,)))
    report.check("{(5,2,1),(1,1)} unlisted", None, k3_known_bad_pair((5, 2, 1), (1, 1)))
    report.check("{(4,3,1),(1,1)} extreme at k=3", True, is_extreme([(4, 3, 1), (1, 1)], 3, bound=max(EXTREME_BOUND, 10))[0])
    report.notes["tuples_per_case"] = dict(sorted(case_counts.items()))


def suite_jacobi_trudi(report: SuiteReport, bound: int = 7, **_) -> None:
    for N in range(1, bound + 1):
        for lam in enumerate_partitions(N):
            report.check(f"det of h-matrix for {format_partition(lam)}", True, jacobi_trudi_check(lam, bound=bound))


def suite_conjecture_main(report: SuiteReport, bound: int = 8, jobs: int = 1, **_) -> None:
    """Extreme at k = 2 exactly when nested."""
    report.kind = CONJECTURE
    for N in range(1, bound + 1):
        extreme = set(extreme_generators(N, 2, jobs=jobs, bound=N))
        nested = set(nested_generators(N))
        for A in sorted(extreme ^ nested, reverse=True):
            report.violations.append(
                (f"N={N} {_fmt(A)}", "extreme" if A in nested else "not extreme", "extreme" if A in extreme else "not extreme")
            )
        report.cases_run += len(extreme | nested)
        report.notes[f"N={N}"] = {"extreme": len(extreme), "nested": len(nested)}


def _extreme_by_degree(bound: int, k: int, jobs: int) -> dict[int, list[PartitionMultiset]]:
    return {N: extreme_generators(N, k, jobs=jobs, bound=N) for N in range(1, bound + 1)}


def suite_conj_iii(report: SuiteReport, bound: int = 8, k: int = 2, jobs: int = 1, **_) -> None:
    """Products of extreme multisets whose parts are separated stay extreme."""
    report.kind = CONJECTURE
    extreme = _extreme_by_degree(bound - 1, k, jobs)
    for N, M in itertools.product(range(1, bound), repeat=2):
        if N + M > bound:
            continue
        for A in extreme[N]:
            lam = phi(A)
            for B in extreme[M]:
                mu = phi(B)
                if len(lam) % 2 and len(mu) % 2:
                    continue
                if lam[-1] > mu[0]:
                    joined = A.union(B)
                    report.check(f"{_fmt(A)} with {_fmt(B)} at k={k}", True, is_extreme(joined, k, bound=N + M)[0])


def suite_conj_iv(report: SuiteReport, bound: int = 8, k: int = 2, jobs: int = 1, **_) -> None:
    """Wrapping an extreme multiset in an outer pair keeps it extreme."""
    report.kind = CONJECTURE
    extreme = _extreme_by_degree(bound - 1, k, jobs)
    for N, gens in extreme.items():
        for A in gens:
            lam = phi(A)
            for r1 in range(lam[0], bound - N):
                for r2 in range(1, min(lam[-1], r1 - 1) + 1):
                    if N + r1 + r2 > bound:
                        continue
                    grown = A.union([(r1, r2)])
                    ok = report.check(f"{_fmt(A)} inside ({r1},{r2}) at k={k}", True, is_extreme(grown, k, bound=N + r1 + r2)[0])
                    if not ok:
                        parity = "odd" if len(lam) % 2 else "even"
                        key = f"violations_with_{parity}_part_count"
                        report.notes[key] = report.notes.get(key, 0) + 1
                        if k == 2 and not is_nested(grown):
                            report.notes["violations_not_nested"] = report.notes.get("violations_not_nested", 0) + 1


def load_published_table() -> dict[tuple[int, int], int]:
    """Published extreme-ray counts keyed by ``(N, k)``."""
    text = resources.files("schurcone").joinpath("data/published_table.tsv").read_text(encoding="utf-8")
    table = {}
    header: Optional[list[int]] = None
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        cells = line.split("\t")
        if header is None:
            header = [int(c) for c in cells[1:]]
            continue
        N = int(cells[0])
        for k, value in zip(header, cells[1:]):
            if value:
                table[(N, k)] = int(value)
    return table


def compute_table(max_N: int, jobs: int = 1, long: bool = False) -> dict[tuple[int, int], int]:
    """``(N, k) -> number of extreme rays`` for ``N <= max_N`` and ``k <= N``.

    Without ``long`` the per-k degree bounds of the solver apply.
    """
    out = {}
    for N in range(1, max_N + 1):
        for k in range(1, N + 1):
            out[(N, k)] = count_extreme(N, k, jobs=jobs, bound=N if long else None)
    return out


def suite_table(report: SuiteReport, bound: int = 8, jobs: int = 1, long: bool = False, **_) -> None:
    published = load_published_table()
    table = compute_table(bound, jobs=jobs, long=long)
    for (N, k), value in sorted(table.items()):
        if (N, k) in published:
            report.check(f"xi(N={N}, k={k})", published[(N, k)], value)
    report.notes["table"] = {f"{N},{k}": v for (N, k), v in sorted(table.items())}


SUITES: dict[str, Callable[..., None]] = {
    "lr-corollary": suite_lr_corollary,
    "lemma15": suite_lemma15,
    "separated-claims": suite_separated_claims,
    "add-square": suite_add_square,
    "squared": suite_squared,
    "k3-identities": suite_k3_identities,
    "jacobi-trudi": suite_jacobi_trudi,
    "conjecture-main": suite_conjecture_main,
    "conj-iii": suite_conj_iii,
    "conj-iv": suite_conj_iv,
    "table": suite_table,
}

# largest accepted --bound per suite
HARD_LIMITS = {
    "lr-corollary": 9,
    "lemma15": 12,
    "separated-claims": 16,
    "add-square": 8,
    "k3-identities": 16,
    "jacobi-trudi": 10,
    "conjecture-main": 10,
    "conj-iii": 10,
    "conj-iv": 10,
    "table": 10,
}


def run_suite(name: str, bound: Optional[int] = None, jobs: int = 1, seed: Optional[int] = None, **options) -> SuiteReport:
    """Run a named suite. ``bound`` overrides the suite's main size parameter."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if bound is not None:
        limit = HARD_LIMITS.get(name)
        if limit is not None and bound > limit:
            raise ValueError(f"bound {bound} exceeds the hard limit {limit} for suite {name}")
        options["bound"] = bound
    if seed is not None:
        random.seed(seed)
    report = SuiteReport(name)
    start = time.perf_counter()
    SUITES[name](report, jobs=jobs, **options)
    report.wall_time = time.perf_counter() - start
    if report.violations:
        level = logging.WARNING if report.kind == CONJECTURE else logging.ERROR
        log.log(level, "%s: %d violation(s), first: %s", name, len(report.violations), report.violations[0][0])
    return report
