"""Unit tests for module categories: unit object, products, rigidity, invertibility."""

import pytest

from whakit import linalg, zoo
from whakit.errors import CriterionUnavailable, InputError
from whakit.fields import QQ_FIELD
from whakit.modules import (check_associativity, check_module, class_decomposition, conjugates,
                            is_invertible_module, module_from_matrices, monoidal_product, radical,
                            radical_annihilates_unit, regular_module, rigidity, unit_constraints, unit_module)


SLOW_XP = pytest.param("xp", marks=pytest.mark.slow)


@pytest.fixture(scope="module")
def two_point():
    """B (x) B^op for B = Q x Q with E(p_1) = E(p_2) = 1; A^L has two central idempotents."""
    K = QQ_FIELD.domain
    B_mult = linalg.from_rows({0: {0: K.one}, 1: {3: K.one}}, (2, 4), K)
    return zoo.separable_pair_wha(QQ_FIELD, B_mult, linalg.column([K.one, K.one], K),
                                  linalg.row([K.one, K.one], K), ["p1", "p2"], "QxQ")


class TestConstruction:
    """Module axioms for the unit and regular modules."""

    @pytest.mark.parametrize("name", ["z3", "s3", "m2q", "f2m2", SLOW_XP, "lz"])
    def test_canonical_modules(self, name, request):
        A = request.getfixturevalue(name)
        assert check_module(unit_module(A)).passed
        assert check_module(regular_module(A)).passed

    def test_unit_module_has_dimension_of_left_subalgebra(self, m2q):
        assert unit_module(m2q).dim == m2q.left_subalgebra.dim == 4

    def test_sign_representation(self, z2):
        sign = module_from_matrices(z2, [[[1]], [[-1]]], "sign")
        assert check_module(sign).passed

    def test_broken_representation(self, z2):
        broken = module_from_matrices(z2, [[[1]], [[2]]], "broken")
        assert not check_module(broken).entry("action multiplicative").passed

    def test_action_count_mismatch(self, z3):
        with pytest.raises(InputError):
            module_from_matrices(z3, [[[1]], [[1]]])

    def test_action_sizes_must_agree(self, z2):
        with pytest.raises(InputError):
            module_from_matrices(z2, [[[1]], [[1, 0], [0, 1]]])


class TestMonoidalStructure:
    """Products, unit constraints, associativity and rigidity."""

    def test_unit_is_neutral_for_dimension(self, m2q):
        U, R = unit_module(m2q), regular_module(m2q)
        assert monoidal_product(U, R).dim == R.dim
        assert monoidal_product(R, U).dim == R.dim

    @pytest.mark.parametrize("name", ["z3", "s3", "m2q"])
    def test_associativity(self, name, request):
        A = request.getfixturevalue(name)
        U = unit_module(A)
        assert check_associativity(U, U, regular_module(A)).passed

    @pytest.mark.parametrize("name", ["z3", "s3", "m2q", "f2m2"])
    def test_unit_module_structure(self, name, request):
        U = unit_module(request.getfixturevalue(name))
        assert unit_constraints(U).report.passed
        assert conjugates(U).report.passed
        assert rigidity(U).passed

    def test_regular_module_structure(self, s3):
        R = regular_module(s3)
        assert unit_constraints(R).report.passed
        assert conjugates(R).report.passed
        assert rigidity(R).passed

    def test_sign_representation_is_rigid(self, z2):
        sign = module_from_matrices(z2, [[[1]], [[-1]]], "sign")
        assert rigidity(sign).passed


class TestDecompositionAndInvertibility:
    """Class decomposition, invertible modules and the radical."""

    def test_group_algebra_has_one_class(self, s3):
        decomposition = class_decomposition(s3, regular_module(s3))
        assert decomposition.split
        assert decomposition.report.passed
        assert [(c.p, c.q) for c in decomposition.classes] == [(0, 0)]

    @pytest.mark.parametrize("name", ["m2q", SLOW_XP])
    def test_zoo_class_decomposition(self, name, request):
        A = request.getfixturevalue(name)
        report = class_decomposition(A, unit_module(A)).report
        assert report.passed
        assert report.entry("unit module class (0,0) is diagonal").passed

    def test_unit_module_classes_are_diagonal(self, two_point):
        decomposition = class_decomposition(two_point, unit_module(two_point))
        assert decomposition.report.passed, decomposition.report.failures
        assert len(decomposition.idempotents) == 2
        assert [(c.p, c.q) for c in decomposition.classes] == [(0, 0), (1, 1)]
        assert all(c.space.dim == 1 for c in decomposition.classes)

    def test_regular_module_has_off_diagonal_classes(self, two_point):
        decomposition = class_decomposition(two_point, regular_module(two_point))
        assert decomposition.report.passed
        assert [(c.p, c.q) for c in decomposition.classes] == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert not any("diagonal" in e.identity for e in decomposition.report.entries)

    @pytest.mark.parametrize("name", ["z3", "m2q"])
    def test_unit_module_is_invertible(self, name, request):
        A = request.getfixturevalue(name)
        verdict = is_invertible_module(A, unit_module(A), 3)
        assert verdict.invertible
        assert verdict.report.passed

    def test_regular_module_is_not_invertible(self, z3):
        verdict = is_invertible_module(z3, regular_module(z3), 3)
        assert not verdict.invertible
        assert not verdict.report.entry("dimension equals dim A^L").passed

    def test_semisimple_radical(self, s3):
        assert radical(s3).dim == 0
        assert radical_annihilates_unit(s3).annihilates

    def test_left_zero_monoid_radical(self, lz):
        check = radical_annihilates_unit(lz)
        assert check.radical.dim == 1
        assert check.radical.contains(lz.element([0, 1, -1]))
        assert check.annihilates

    def test_radical_needs_characteristic_zero(self, f2m2):
        with pytest.raises(CriterionUnavailable):
            radical(f2m2)
