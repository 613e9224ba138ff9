import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcone.partitions import (
    BumpUndefined,
    GradingError,
    Partition,
    PartitionError,
    PartitionMultiset,
    bump,
    bump_iter,
    completely_nested,
    completely_separated,
    dominates,
    enumerate_generators,
    enumerate_partitions,
    format_multiset,
    format_partition,
    generators_with_phi,
    is_nested,
    k3_known_bad_pair,
    leq_p,
    nested_report,
    parse_multiset,
    parse_partition,
    phi,
    syt_count,
)

PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@st.composite
def partitions(draw, max_weight=10):
    n = draw(st.integers(0, max_weight))
    parts = enumerate_partitions(n)
    return parts[draw(st.integers(0, len(parts) - 1))]


class TestPartition:
    def test_strips_zeros(self):
        assert Partition((3, 1, 0, 0)) == (3, 1)
        assert Partition((0,)) == ()

    def test_rejects_increasing(self):
        with pytest.raises(PartitionError):
            Partition((1, 2))

    def test_weight_and_length(self):
        lam = Partition((4, 3, 3, 2, 1))
        assert lam.weight == 13 and lam.length == 5

    def test_conjugate(self):
        assert Partition((4, 2, 1)).conjugate() == (3, 2, 1, 1)

    def test_multiset_is_canonical(self):
        A = PartitionMultiset([(3, 1), (4,), (3, 2)])
        B = PartitionMultiset([(3, 2), (3, 1), (4,)])
        assert A == B and hash(A) == hash(B)
        assert A.total_weight == 13 and A.max_parts == 2
        assert A.multiplicity((3, 1)) == 1

    def test_multiset_drops_empty_entries(self):
        assert PartitionMultiset([(2,), ()]) == PartitionMultiset([(2,)])

    @given(partitions())
    def test_text_roundtrip(self, lam):
        assert parse_partition(format_partition(lam)) == lam

    def test_multiset_text(self):
        A = parse_multiset("3,2|3,1|4")
        assert format_multiset(A) == "4|3,2|3,1"
        assert parse_multiset("") == PartitionMultiset()

    def test_bad_text(self):
        with pytest.raises(PartitionError):
            parse_partition("3,x")


class TestDominance:
    @pytest.mark.parametrize(
        "lhs, rhs, expected",
        [((4,), (2, 2), True), ((3, 3), (3, 3), True), ((2, 2, 1, 1), (3, 1, 1, 1), False)],
    )
    def test_examples(self, lhs, rhs, expected):
        assert dominates(lhs, rhs) is expected

    def test_weight_mismatch(self):
        with pytest.raises(GradingError):
            dominates((3,), (2,))

    @pytest.mark.parametrize("N", range(1, 9))
    def test_partial_order(self, N):
        P = enumerate_partitions(N)
        rel = {(a, b): dominates(a, b) for a in P for b in P}
        for a in P:
            assert rel[(a, a)]
        for a, b in itertools.product(P, repeat=2):
            if a != b:
                assert not (rel[(a, b)] and rel[(b, a)])
        for a, b, c in itertools.product(P, repeat=3):
            if rel[(a, b)] and rel[(b, c)]:
                assert rel[(a, c)]


class TestPhi:
    def test_examples(self):
        assert phi([(3, 2), (3, 1), (4,)]) == (4, 3, 3, 2, 1)
        assert phi([]) == ()
        assert phi([(2, 1), (2, 1)]) == (2, 2, 1, 1)

    @given(st.lists(partitions(6), max_size=4), partitions(6))
    def test_weight_adds(self, A, rho):
        assert phi(list(A) + [rho]).weight == phi(A).weight + rho.weight


class TestBump:
    def test_examples(self):
        assert bump((2, 2, 1, 1), (2, 2)) == (3, 1, 1, 1)
        assert bump((2, 2, 1, 1), (1, 1)) == (2, 2, 2)
        with pytest.raises(BumpUndefined):
            bump((3, 1), (2, 1))

    def test_needs_two_positions(self):
        with pytest.raises(BumpUndefined):
            bump((3, 2, 1), (2, 2))

    def test_preserves_weight_and_dominates(self):
        for N in range(1, 9):
            for lam in enumerate_partitions(N):
                values = sorted(set(lam), reverse=True)
                for r1, r2 in itertools.combinations_with_replacement(values, 2):
                    try:
                        out = bump(lam, (r1, r2))
                    except BumpUndefined:
                        continue
                    assert out.weight == lam.weight
                    assert dominates(out, lam)

    def test_iterated(self):
        assert bump_iter((2, 2, 2, 2), 2, 1) == (3, 2, 2, 1)
        assert bump_iter((2, 2, 2, 2), 2, 2) == (3, 3, 1, 1)
        assert bump_iter((2, 2, 2, 2), 2, 3) is None
        assert bump_iter((5, 1), 2, 0) == (5, 1)


class TestLeqP:
    def test_examples(self):
        assert leq_p((2, 2, 1, 1), (2, 2, 1, 1), 2)
        assert bump_iter((2, 2, 2, 2), 2, 1) == (3, 2, 2, 1)
        assert leq_p((3, 2, 2, 1), (2, 2, 2, 2), 2)
        assert leq_p((4, 4), (4, 4), 3)

    def test_not_related(self):
        assert not leq_p((4, 4), (2, 2, 2, 2), 2)

    def test_weight_mismatch(self):
        with pytest.raises(GradingError):
            leq_p((2,), (1,), 1)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(4, 10), st.integers(1, 4), st.randoms(use_true_random=False))
    def test_poset_on_minimal_elements(self, N, p, rnd):
        P = [lam for lam in enumerate_partitions(N) if rnd.random() < 0.5]
        P_min = [x for x in P if not any(y != x and dominates(x, y) for y in P)]
        rel = {(x, y): leq_p(x, y, p) for x in P_min for y in P_min}
        for x in P_min:
            assert rel[(x, x)]
        for x, y in itertools.permutations(P_min, 2):
            assert not (rel[(x, y)] and rel[(y, x)])
        for x, y, z in itertools.product(P_min, repeat=3):
            if rel[(x, y)] and rel[(y, z)]:
                assert rel[(x, z)]


def _brute_force_syt(lam):
    n = sum(lam)
    cells = [(r, c) for r, k in enumerate(lam) for c in range(k)]
    count = 0
    for labels in itertools.permutations(range(1, n + 1)):
        val = dict(zip(cells, labels))
        if all(
            (c == 0 or val[(r, c - 1)] < v) and (r == 0 or val[(r - 1, c)] < v)
            for (r, c), v in val.items()
        ):
            count += 1
    return count


class TestSytCount:
    def test_examples(self):
        assert syt_count((5,)) == 1
        assert syt_count((2, 1)) == 2
        assert syt_count((2, 1, 1)) == 3

    def test_empty(self):
        with pytest.raises(PartitionError):
            syt_count(())

    @pytest.mark.parametrize("N", range(1, 7))
    def test_brute_force(self, N):
        for lam in enumerate_partitions(N):
            assert syt_count(lam) == _brute_force_syt(lam)


class TestEnumeration:
    def test_partitions(self):
        assert enumerate_partitions(4, 2) == [(4,), (3, 1), (2, 2)]
        assert enumerate_partitions(0) == [()]
        assert len(enumerate_partitions(6)) == 11

    def test_descending_lex_without_repeats(self):
        P = enumerate_partitions(9)
        assert P == sorted(set(P), reverse=True)

    def test_generators(self):
        assert enumerate_generators(2, 1) == [PartitionMultiset([(2,)]), PartitionMultiset([(1,), (1,)])]
        gens = enumerate_generators(3, 2)
        assert len(gens) == 5
        assert set(gens) == {
            PartitionMultiset(x)
            for x in ([(3,)], [(2, 1)], [(2,), (1,)], [(1, 1), (1,)], [(1,), (1,), (1,)])
        }

    @pytest.mark.parametrize("N", range(1, 11))
    def test_one_part_generators_count_partitions(self, N):
        assert len(enumerate_generators(N, 1)) == PARTITION_COUNTS[N - 1]

    @pytest.mark.parametrize("N, k", [(5, 2), (6, 3), (7, 7)])
    def test_generators_are_distinct_and_bounded(self, N, k):
        gens = enumerate_generators(N, k)
        assert len(gens) == len(set(gens))
        assert all(A.total_weight == N and A.max_parts <= k for A in gens)

    def test_generators_with_phi_partition_the_generators(self):
        by_phi = Counter(phi(A) for A in enumerate_generators(8, 3))
        for lam, count in by_phi.items():
            found = generators_with_phi(lam, 3)
            assert len(found) == count
            assert all(phi(A) == lam for A in found)


class TestNested:
    def test_examples(self):
        report = nested_report(PartitionMultiset([(6, 5), (5, 4)]))
        assert not report.is_nested and report.violations[0][1] == "1"
        assert nested_report([(2,), (1,)]).violations == (((0, 1), "3"),)
        assert is_nested([(3, 2), (3, 1), (4,)])

    def test_condition_two(self):
        assert nested_report([(3, 1), (2,)]).violations[0][1] == "2"
        assert is_nested([(2, 2), (2,)])

    def test_three_parts_rejected(self):
        with pytest.raises(PartitionError):
            nested_report([(2, 1, 1)])

    @given(st.lists(st.integers(1, 6), min_size=2, max_size=5))
    def test_single_parts_always_condition_three(self, parts):
        report = nested_report([(p,) for p in parts])
        assert report.violations and all(label == "3" for _, label in report.violations)

    def test_report_json(self):
        A = PartitionMultiset([(6, 5), (5, 4)])
        out = nested_report(A).to_json(A)
        assert out["nested"] is False
        assert out["violations"][0]["partitions"] == ["6,5", "5,4"]


class TestK3:
    def test_examples(self):
        assert k3_known_bad_pair((3, 2), (4,)) == "k3-1"
        assert k3_known_bad_pair((5, 2, 1), (1, 1)) is None
        assert k3_known_bad_pair((3, 2), (2, 2)) == "k3-5"

    def test_orientation_free(self):
        assert k3_known_bad_pair((4,), (3, 2)) == "k3-1"
        assert k3_known_bad_pair((4, 2, 1), (3,)) == "k3-2"

    def test_too_many_parts(self):
        with pytest.raises(PartitionError):
            k3_known_bad_pair((1, 1, 1, 1), (1,))


class TestPairings:
    def test_examples(self):
        assert completely_separated([(6, 5), (5, 4)])
        assert completely_nested([(6, 4), (5, 5)])
        assert not completely_nested([(6, 5), (5, 4)])

    def test_one_part_entry_rejected(self):
        with pytest.raises(PartitionError):
            completely_separated([(3, 1), (2,)])

    def test_completely_nested_implies_nested(self):
        for N in range(2, 11, 2):
            for A in enumerate_generators(N, 2):
                if all(len(mu) == 2 for mu in A) and completely_nested(A):
                    assert is_nested(A)
