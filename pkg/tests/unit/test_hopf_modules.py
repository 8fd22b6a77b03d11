"""Unit tests for weak Hopf modules and the structure theorem."""

import pytest

from whakit import linalg
from whakit.errors import InputError
from whakit.hopf_modules import (Variant, WeakHopfModule, check_whm, coinvariants, dual_action_route, dual_whm,
                                 freeness_certificates, invariants, quasi_frobenius_certificate, regular_whm,
                                 star_action, structure_theorem, whm_projections)


HOPF = ["z3", "s3", "m2q", "f2m2"]


class TestAxioms:
    """The regular and dual weak Hopf modules."""

    @pytest.mark.parametrize("name", HOPF)
    def test_canonical_modules(self, name, request):
        A = request.getfixturevalue(name)
        assert check_whm(regular_whm(A)).passed
        assert check_whm(dual_whm(A)).passed

    def test_regular_carries_all_variants(self, z3):
        assert set(regular_whm(z3).variants) == set(Variant)

    def test_dual_carries_right_coaction_only(self, z3):
        assert set(dual_whm(z3).variants) == {Variant.RIGHT_RIGHT, Variant.LEFT_RIGHT}

    def test_shape_validation(self, z3):
        with pytest.raises(InputError):
            WeakHopfModule(z3, 2, left_action=tuple(z3.left_mult(z3.basis_vector(i)) for i in range(3)))

    def test_missing_variant(self, z3):
        with pytest.raises(InputError):
            dual_whm(z3).require(Variant.LEFT_LEFT)


class TestCoinvariants:
    """Coinvariants, invariants and the projections onto them."""

    @pytest.mark.parametrize("variant", list(Variant))
    def test_regular_coinvariants_are_target_subalgebras(self, m2q, variant):
        space = coinvariants(regular_whm(m2q), variant)
        expected = m2q.left_subalgebra if variant.right_coaction else m2q.right_subalgebra
        assert space == expected

    @pytest.mark.parametrize("variant", list(Variant))
    def test_projections(self, s3, variant):
        assert whm_projections(regular_whm(s3), variant).report.passed

    def test_group_algebra_coinvariants(self, z3):
        space = coinvariants(regular_whm(z3), Variant.RIGHT_RIGHT)
        assert space.dim == 1
        assert space.contains(z3.unit)

    def test_invariants_of_regular(self, z3):
        space = invariants(regular_whm(z3), Variant.LEFT_RIGHT)
        assert space.contains(z3.element([1, 1, 1]))


class TestStructureTheorem:
    """M is isomorphic to its coinvariants tensored with A."""

    @pytest.mark.parametrize("name", HOPF)
    def test_structure_theorem(self, name, request):
        A = request.getfixturevalue(name)
        assert structure_theorem(regular_whm(A)).report.passed
        assert structure_theorem(dual_whm(A)).report.passed

    def test_star_action_is_a_module(self, m2q):
        module, report = star_action(dual_whm(m2q))
        assert report.passed
        assert module.dim == coinvariants(dual_whm(m2q), Variant.LEFT_RIGHT).dim

    @pytest.mark.parametrize("name", HOPF)
    def test_dual_action_route(self, name, request):
        assert dual_action_route(regular_whm(request.getfixturevalue(name))).passed

    def test_structure_theorem_needs_two_actions(self, z3):
        one_sided = WeakHopfModule(z3, 3, left_action=regular_whm(z3).left_action, right_coaction=z3.comult)
        with pytest.raises(InputError):
            structure_theorem(one_sided)


class TestFrobenius:
    """Quasi-Frobenius and freeness certificates."""

    @pytest.mark.parametrize("name", HOPF)
    def test_quasi_frobenius(self, name, request):
        assert quasi_frobenius_certificate(request.getfixturevalue(name)).passed

    @pytest.mark.parametrize("name", ["z3", "m2q"])
    def test_freeness(self, name, request):
        A = request.getfixturevalue(name)
        certificates = freeness_certificates(A, 3)
        assert certificates.report.passed
        assert certificates.dual_integrals.dim == A.left_subalgebra.dim
        assert certificates.right_integrals.dim == A.left_subalgebra.dim
