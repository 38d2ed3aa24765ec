"""Gradings: attachment, graded ideals, graded primeness, classification."""

import pytest

from gradedprime import finring as fr
from gradedprime import grading as gr
from gradedprime.errors import SpecError
from gradedprime.groups import Z, cyclic

from corpus import (
    corpus_rings,
    graded_corpus,
    group_algebra_grading,
    tri_standard,
    z_graded_corpus,
    zero_mult_graded,
)

E11, E12, E22 = 4, 2, 1  # tri(gf(2),2) element indices


@pytest.fixture(scope="module")
def tri2():
    return fr.tri(fr.gf(2), 2)


@pytest.fixture(scope="module")
def tri2_std():
    return tri_standard(2, 2)


class TestAttach:
    def test_standard_triangular_grading_is_accepted(self, tri2_std):
        assert tri2_std.support == (0, 1)
        assert tri2_std.component(1) == fr.mask_of([0, E12])

    def test_trivial_grading_is_accepted(self):
        for name, ring in corpus_rings():
            g = gr.trivial_grading(ring)
            assert g.e_mask == ring.full_mask

    def test_overlapping_components_are_rejected(self, tri2):
        with pytest.raises(SpecError):
            gr.attach_grading(tri2, Z, {0: tri2.full_mask, 1: tri2.full_mask})

    def test_size_mismatch_is_rejected(self, tri2):
        with pytest.raises(SpecError):
            gr.attach_grading(tri2, Z, {0: [0, 1, 4, 5]})

    def test_nonmultiplicative_splitting_of_gf4_is_rejected(self):
        r = fr.gf(4)
        # additively fine ({0,1} + {0,a} spans), but a*a = a+1 escapes
        with pytest.raises(SpecError):
            gr.attach_grading(r, cyclic(2), {0: [0, 1], 1: [0, 2]})

    def test_non_subgroup_component_is_rejected(self, tri2):
        with pytest.raises(SpecError):
            gr.attach_grading(tri2, Z, {0: [0, 1, 4], 1: [0, E12]})

    def test_grading_with_zero_identity_component(self):
        g = zero_mult_graded()
        assert g.e_mask == g.ring.zero_mask
        assert g.support == (1,)


class TestDecomposition:
    def test_zero_decomposes_to_nothing(self, tri2_std):
        assert gr.homogeneous_components(tri2_std, tri2_std.ring.zero) == {}

    def test_homogeneous_elements_have_one_part(self, tri2_std):
        assert gr.homogeneous_components(tri2_std, E12) == {1: E12}

    def test_mixed_element_splits(self, tri2_std):
        assert gr.homogeneous_components(tri2_std, E11 + E12) == {0: E11, 1: E12}

    @pytest.mark.parametrize("name,graded", graded_corpus())
    def test_parts_sum_back(self, name, graded):
        ring = graded.ring
        for s in ring.elements():
            assert ring.sum(gr.homogeneous_components(graded, s).values()) == s


class TestGradedIdeals:
    def test_zero_and_whole_are_graded(self, tri2_std):
        ring = tri2_std.ring
        assert gr.is_graded_ideal(tri2_std, fr.zero_ideal(ring))
        assert gr.is_graded_ideal(tri2_std, fr.full_ideal(ring))

    def test_all_five_triangular_ideals_are_graded(self, tri2_std):
        assert len(gr.all_graded_ideals(tri2_std)) == 5

    def test_group_algebra_has_ungraded_ideals(self):
        g = group_algebra_grading(fr.gf(2), cyclic(2))
        assert len(fr.all_ideals(g.ring)) == 3
        assert len(gr.all_graded_ideals(g)) == 2

    def test_generate_by_strict_upper_unit(self, tri2_std):
        ideal = gr.generate_graded_ideal(tri2_std, [E12])
        assert sorted(ideal.elements()) == [0, E12]

    def test_generate_by_diagonal_unit(self, tri2_std):
        ideal = gr.generate_graded_ideal(tri2_std, [E11])
        assert sorted(ideal.elements()) == [0, E12, E11, E11 + E12]

    def test_generate_by_nothing(self, tri2_std):
        assert gr.generate_graded_ideal(tri2_std, []).is_zero

    def test_inhomogeneous_generator_is_rejected(self, tri2_std):
        with pytest.raises(ValueError):
            gr.generate_graded_ideal(tri2_std, [E11 + E12])

    @pytest.mark.parametrize("name,graded", graded_corpus())
    def test_homogeneously_generated_ideals_are_graded(self, name, graded):
        hom = [s for s in graded.ring.elements() if graded.is_homogeneous(s)]
        for a in hom:
            ideal = gr.generate_graded_ideal(graded, [a])
            assert gr.is_graded_ideal(graded, ideal)
        for a in hom:
            for b in hom:
                ideal = gr.generate_graded_ideal(graded, [a, b])
                assert gr.is_graded_ideal(graded, ideal)


class TestGradedMSystems:
    def test_complement_of_graded_prime_is_graded_m_system(self, tri2_std):
        ring = tri2_std.ring
        row = fr.generate_ideal(ring, [E11])
        assert gr.is_graded_prime_ideal(tri2_std, row)
        assert gr.is_graded_m_system(tri2_std, ring.full_mask & ~row.members)

    def test_nonzero_elements_of_a_field(self):
        g = gr.trivial_grading(fr.gf(3))
        assert gr.is_graded_m_system(g, fr.mask_of([1, 2]))

    def test_complement_of_the_nilpotent_ideal_is_not(self, tri2_std):
        ring = tri2_std.ring
        n = fr.mask_of([0, E12])
        assert not gr.is_graded_m_system(tri2_std, ring.full_mask & ~n)


class TestGradedPrimeness:
    def test_row_ideal_is_graded_prime(self, tri2_std):
        row = fr.generate_ideal(tri2_std.ring, [E11])
        assert gr.is_graded_prime_ideal(tri2_std, row)

    def test_zero_is_not_graded_prime_in_triangular(self, tri2_std):
        assert not gr.is_graded_prime_ring(tri2_std)

    def test_fields_are_graded_prime(self):
        assert gr.is_graded_prime_ring(gr.trivial_grading(fr.gf(5)))

    def test_group_algebra_is_graded_prime_but_not_prime(self):
        # the grading group is not ordered, so the two notions may differ
        g = group_algebra_grading(fr.gf(2), cyclic(2))
        assert gr.is_graded_prime_ring(g)
        assert not fr.is_prime_ring(g.ring)

    def test_ungraded_ideal_is_rejected(self):
        g = group_algebra_grading(fr.gf(2), cyclic(2))
        ungraded = fr.generate_ideal(g.ring, [3])  # 1 + g
        with pytest.raises(ValueError):
            gr.is_graded_prime_ideal(g, ungraded)

    @pytest.mark.parametrize("name,graded", graded_corpus())
    def test_three_graded_prime_criteria_agree(self, name, graded):
        for ideal in gr.all_graded_ideals(graded):
            if not ideal.is_proper:
                continue
            verdicts = {
                gr.graded_prime_pair_test(graded, ideal),
                gr.graded_prime_element_criterion(graded, ideal),
                gr.is_graded_m_system(graded, graded.ring.full_mask & ~ideal.members),
            }
            assert len(verdicts) == 1, f"criteria disagree on {ideal} of {name}"

    @pytest.mark.parametrize("name,graded", z_graded_corpus())
    def test_ordered_gradings_transfer_primeness(self, name, graded):
        ring = graded.ring
        if ring.order > 1:
            assert fr.is_prime_ring(ring) == gr.is_graded_prime_ring(graded)
        for ideal in gr.all_graded_ideals(graded):
            if ideal.is_proper:
                assert fr.is_prime_ideal(ring, ideal) == gr.is_graded_prime_ideal(
                    graded, ideal
                ), f"{name}: {ideal}"


class TestClassification:
    def test_trivial_group_grading_on_a_field_is_everything(self):
        c = gr.classify_grading(gr.trivial_grading(fr.gf(2), cyclic(1)))
        assert c == gr.GradingClassification(True, True, True, True)

    def test_trivial_integer_grading_is_not_strong(self):
        # a nonzero integer-graded ring with finite support never has full
        # support, so strength fails even though all local-unit classes hold
        c = gr.classify_grading(gr.trivial_grading(fr.gf(2)))
        assert c == gr.GradingClassification(False, True, True, True)

    def test_standard_triangular_grading_is_nothing(self, tri2_std):
        c = gr.classify_grading(tri2_std)
        assert c == gr.GradingClassification(False, False, False, False)

    def test_group_algebra_grading_is_everything(self):
        c = gr.classify_grading(group_algebra_grading(fr.gf(2), cyclic(2)))
        assert c == gr.GradingClassification(True, True, True, True)

    def test_matrix_diagonal_grading(self):
        from corpus import mat_standard

        c = gr.classify_grading(mat_standard(2, 2))
        assert not c.strongly  # finite support over the integers
        assert c.symmetrically and c.ideally_symmetrically and c.nearly_epsilon_strongly

    def test_trivial_grading_on_a_nonidempotent_ring(self):
        from corpus import ring_by_name

        c = gr.classify_grading(gr.trivial_grading(ring_by_name("even8")))
        assert c == gr.GradingClassification(False, False, False, False)

    @pytest.mark.parametrize("name,graded", graded_corpus())
    def test_implication_chain(self, name, graded):
        c = gr.classify_grading(graded)
        if c.nearly_epsilon_strongly:
            assert c.ideally_symmetrically
        if c.ideally_symmetrically:
            assert c.symmetrically
        if c.strongly and graded.ring.unit is not None:
            assert c.nearly_epsilon_strongly
