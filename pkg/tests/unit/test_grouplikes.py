"""Unit tests for grouplike elements and the distinguished grouplikes."""

import pytest
from hypothesis import assume, given, settings, strategies as st

from whakit import linalg, zoo
from whakit.errors import InputError
from whakit.grouplikes import (Kind, check_grouplike_properties, check_integral_module_structure,
                               check_s2_implementer, classify_grouplike, coset_classes, distinguished,
                               grouplike_arrow_automorphism, normalize_grouplike, s2_implementer_on_AT,
                               same_coset, trivial_grouplike)
from whakit.wba import dualize


SLOW_XP = pytest.param("xp", marks=pytest.mark.slow)


class TestClassification:
    """Left, right and two-sided grouplikes."""

    @pytest.mark.parametrize("i", [0, 1, 2])
    def test_group_elements_are_grouplike(self, z3, i):
        witness = classify_grouplike(z3, z3.basis_vector(i))
        assert witness.kind is Kind.BOTH
        assert linalg.equal(witness.inverse, z3.basis_vector((3 - i) % 3))
        assert linalg.equal(witness.pi_left, z3.unit)

    def test_scaled_group_element_is_not(self, z3):
        assert classify_grouplike(z3, linalg.scale(z3.basis_vector(1), z3.field.convert(2))) is None

    def test_non_invertible_is_not(self, z3):
        assert classify_grouplike(z3, z3.element([1, 1, 1])) is None

    def test_kind_covers(self):
        assert Kind.BOTH.covers(Kind.LEFT)
        assert Kind.RIGHT.covers(Kind.RIGHT)
        assert not Kind.LEFT.covers(Kind.RIGHT)

    @pytest.mark.slow
    def test_crossed_product_generator(self, xp):
        g = zoo.crossed_product_generator(xp)
        witness = classify_grouplike(xp, g)
        assert witness is not None
        assert witness.kind.covers(Kind.RIGHT)
        assert not xp.trivial_subalgebra.contains(g)

    def test_matrix_pair_grouplike(self, m2q):
        t = zoo.matrix_pair_grouplike(zoo.M2Q_T)
        g = normalize_grouplike(m2q, t)
        assert g is not None
        assert classify_grouplike(m2q, g).kind is Kind.BOTH

    def test_witness_serializes(self, z3):
        data = classify_grouplike(z3, z3.basis_vector(1)).to_dict(z3.field)
        assert data["kind"] == "both"
        assert data["element"] == ["0", "1", "0"]
        assert data["inverse"] == ["0", "0", "1"]


class TestGroupProperties:
    """Normalizations, closure and cosets of trivial grouplikes."""

    def test_group_algebra_properties(self, s3):
        witnesses = [classify_grouplike(s3, s3.basis_vector(i)) for i in range(s3.dim)]
        assert check_grouplike_properties(s3, witnesses).passed

    @pytest.mark.slow
    def test_crossed_product_properties(self, xp):
        witness = classify_grouplike(xp, zoo.crossed_product_generator(xp))
        assert check_grouplike_properties(xp, [witness]).passed

    def test_trivial_grouplike_of_unit(self, m2q):
        g = trivial_grouplike(m2q, m2q.unit, Kind.RIGHT)
        assert linalg.equal(g, m2q.unit)

    def test_trivial_grouplike_rejects_elements_outside_left_subalgebra(self, z3):
        with pytest.raises(InputError):
            trivial_grouplike(z3, z3.basis_vector(1))

    def test_trivial_grouplike_rejects_both(self, z3):
        with pytest.raises(InputError):
            trivial_grouplike(z3, z3.unit, Kind.BOTH)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
    def test_trivial_grouplikes_from_random_left_elements(self, m2q, coords):
        assume(any(coords))
        basis = m2q.left_subalgebra.vectors()
        x = linalg.linear_combination([m2q.field.convert(c) for c in coords], basis)
        if m2q.inverse_of(x) is None:
            with pytest.raises(InputError):
                trivial_grouplike(m2q, x)
            return
        for side in (Kind.RIGHT, Kind.LEFT):
            g = trivial_grouplike(m2q, x, side)
            assert classify_grouplike(m2q, g).kind.covers(side)
            assert m2q.trivial_subalgebra.contains(g)

    def test_cosets_of_group_elements(self, z3):
        witnesses = [classify_grouplike(z3, z3.basis_vector(i)) for i in range(3)]
        classes, report = coset_classes(z3, witnesses + [witnesses[1]])
        assert report.passed
        assert classes == [[0], [1, 3], [2]]

    @pytest.mark.slow
    def test_same_coset_needs_equal_kinds(self, xp):
        right = classify_grouplike(xp, zoo.crossed_product_generator(xp))
        both = classify_grouplike(xp, xp.unit)
        if right.kind is not Kind.BOTH:
            with pytest.raises(InputError):
                same_coset(xp, right, both)

    def test_arrow_automorphism_needs_matching_side(self, z3):
        sigma = classify_grouplike(dualize(z3), z3.dual_unit)
        with pytest.raises(InputError):
            grouplike_arrow_automorphism(z3, sigma, Kind.BOTH)


class TestDistinguished:
    """s = l <- lambda and sigma = lambda <- l."""

    def test_group_algebra_is_unimodular(self, z3, z3_pair):
        dist = distinguished(z3, z3_pair)
        assert dist.report.passed
        assert linalg.equal(dist.s.g, z3.unit)
        assert linalg.equal(dist.sigma.g, z3.dual_unit)

    @pytest.mark.parametrize("name", ["s3", "m2q", "f2m2", SLOW_XP])
    def test_zoo_distinguished(self, name, request):
        A = request.getfixturevalue(name)
        pair = request.getfixturevalue(f"{name}_pair")
        dist = distinguished(A, pair)
        assert dist.report.passed
        assert dist.s.kind.covers(Kind.LEFT)
        assert check_integral_module_structure(A, pair, dist).passed

    def test_arrow_by_sigma_is_automorphism(self, m2q, m2q_pair):
        dist = distinguished(m2q, m2q_pair)
        assert grouplike_arrow_automorphism(m2q, dist.sigma, Kind.LEFT).passed


class TestS2Implementer:
    """S^2 is conjugation by a grouplike of A^T."""

    @pytest.mark.parametrize("name", ["z3", "m2q", "f2m2"])
    def test_implementer_found(self, name, request):
        A = request.getfixturevalue(name)
        t = s2_implementer_on_AT(A, 3)
        assert t is not None
        assert check_s2_implementer(A, t).passed

    def test_group_algebra_implementer_is_unit(self, s3):
        assert linalg.equal(s2_implementer_on_AT(s3, 3), s3.unit)

    def test_unit_does_not_implement_nontrivial_s2(self, m2q):
        assert not linalg.equal(m2q.antipode_power(2), m2q.identity)
        assert not check_s2_implementer(m2q, m2q.unit).passed
