from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcone.partitions import (
    GradingError,
    dominates,
    enumerate_generators,
    enumerate_partitions,
    parse_multiset,
    phi,
)
from schurcone.schur import (
    BoundExceeded,
    SchurVector,
    add_scaled,
    block_assignment,
    coefficient,
    count_lr_tableaux,
    expand_product,
    expand_product_oracle,
    factor_blocks,
    jacobi_trudi_check,
    jacobi_trudi_expansion,
    lr_convolve,
    lr_multi,
    lr_multi_sorted,
    product,
    schur,
    skew_lr_count,
)


@st.composite
def multisets(draw, max_weight=6, max_parts=3):
    N = draw(st.integers(1, max_weight))
    gens = enumerate_generators(N, max_parts)
    return gens[draw(st.integers(0, len(gens) - 1))]


class TestSchurVector:
    def test_zero_entries_dropped(self):
        v = SchurVector(3, {(3,): 1, (2, 1): 0})
        assert v.support() == {(3,)}

    def test_grading_enforced(self):
        with pytest.raises(GradingError):
            SchurVector(3, {(2,): 1})
        with pytest.raises(GradingError):
            schur((2,)) + schur((3,))

    def test_linear_algebra(self):
        v = expand_product([(2,), (1,)])
        assert add_scaled(v, v, -1) == SchurVector(3)
        assert coefficient(v, (1, 1, 1)) == 0
        half = add_scaled(SchurVector(3), v, Fraction(1, 2))
        assert half[(3,)] == Fraction(1, 2)

    def test_json_roundtrip(self):
        v = expand_product([(2, 1), (1,)])
        data = v.to_json()
        assert data["degree"] == 4 and data["coeffs"]["3,1"] == "1"
        assert SchurVector.from_json(data) == v


class TestBlocks:
    def test_block_assignment_examples(self):
        content, blocks = block_assignment(parse_multiset("3,2|3,1|4"))
        assert content == (4, 3, 3, 2, 1)
        # canonical order is (4), (3,2), (3,1)
        assert blocks == ((1,), (2, 4), (3, 5))
        assert block_assignment([(2, 1)]) == ((2, 1), ((1, 2),))
        assert block_assignment([(1,), (1,)]) == ((1, 1), ((1,), (2,)))

    def test_blocks_partition_the_letters(self):
        for A in enumerate_generators(7, 3):
            for content, blocks in (block_assignment(A), factor_blocks(A)):
                letters = sorted(x for b in blocks for x in b)
                assert letters == list(range(1, len(content) + 1))
                assert [len(b) for b in blocks] == [len(mu) for mu in A]

    def test_factor_blocks_are_consecutive(self):
        assert factor_blocks([(2, 1), (3,)]) == ((3, 2, 1), ((1,), (2, 3)))


class TestLR:
    def test_examples(self):
        assert lr_multi([(2, 1), (2, 1)], (3, 2, 1)) == 2
        assert lr_multi([(1,), (1,)], (2,)) == 1
        with pytest.raises(GradingError):
            lr_multi([(1,)], (2,))

    @pytest.mark.parametrize("N", range(1, 8))
    def test_leading_coefficient_is_one(self, N):
        for A in enumerate_generators(N, N):
            assert lr_multi(A, phi(A)) == 1

    @pytest.mark.parametrize("N", range(1, 8))
    def test_nonnegative_with_dominance_support(self, N):
        for A in enumerate_generators(N, N):
            content, blocks = factor_blocks(A)
            for lam in enumerate_partitions(N):
                c = count_lr_tableaux(lam, content, blocks)
                assert c >= 0
                if c:
                    assert dominates(lam, phi(A))

    @pytest.mark.parametrize("N", range(1, 8))
    def test_tableau_count_matches_factorwise_expansion(self, N):
        for A in enumerate_generators(N, N):
            v = expand_product(A)
            for lam in enumerate_partitions(N):
                assert lr_multi(A, lam) == v[lam]

    def test_skew_counts(self):
        assert skew_lr_count((3, 2, 1), (2, 1), (2, 1)) == 2
        assert skew_lr_count((2, 2), (2,), (1, 1)) == 0
        assert skew_lr_count((2, 2), (2,), (2,)) == 1

    def test_sorted_content_rule_overcounts(self):
        # counting with content phi(A) differs from the true coefficient here
        for text, lam in [("2,1|2|2", (4, 3)), ("3,1,1|2|2", (4, 4, 1))]:
            A = parse_multiset(text)
            truth = expand_product_oracle(A, bound=9)[lam]
            assert lr_multi(A, lam) == truth
            assert lr_multi_sorted(A, lam) != truth


class TestExpand:
    def test_examples(self):
        assert expand_product([(2,), (1,)]) == SchurVector(3, {(3,): 1, (2, 1): 1})
        assert expand_product([(1,), (1,), (1,)]) == SchurVector(3, {(3,): 1, (2, 1): 2, (1, 1, 1): 1})
        lhs = expand_product([(5, 2, 1), (1, 1)])
        assert lhs == product((1, 1, 1), (5, 2)) + product((5, 2, 2), (1,))

    def test_unit(self):
        assert expand_product([]) == SchurVector(0, {(): 1})
        assert product((2, 1), ()) == schur((2, 1))

    @given(multisets(7, 7))
    def test_degree_grading(self, A):
        v = expand_product(A)
        assert v.degree == A.total_weight
        assert all(lam.weight == v.degree for lam in v.support())
        assert v[phi(A)] == 1

    @settings(max_examples=60, deadline=None)
    @given(multisets(3, 3), multisets(3, 3))
    def test_associativity(self, A, B):
        assert expand_product(A.union(B)) == lr_convolve(expand_product(A), expand_product(B))


class TestOracle:
    def test_examples(self):
        assert expand_product_oracle([(1,)]) == schur((1,))
        assert expand_product_oracle([(2, 1)]) == schur((2, 1))
        with pytest.raises(BoundExceeded):
            expand_product_oracle([(9,)])

    @pytest.mark.parametrize("N", range(1, 7))
    def test_equivalence(self, N):
        for A in enumerate_generators(N, min(N, 3)):
            assert expand_product(A) == expand_product_oracle(A)


class TestJacobiTrudi:
    def test_examples(self):
        assert jacobi_trudi_expansion((2, 1)) == schur((2, 1))
        assert jacobi_trudi_expansion((4,)) == schur((4,))
        assert jacobi_trudi_expansion((1, 1)) == schur((1, 1))

    @pytest.mark.parametrize("N", range(1, 8))
    def test_all_shapes(self, N):
        assert all(jacobi_trudi_check(lam) for lam in enumerate_partitions(N))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            jacobi_trudi_check((11,))
