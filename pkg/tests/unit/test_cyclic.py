"""Unit tests for modular pairs and the cyclic module."""

import pytest

from whakit import linalg
from whakit.cyclic import check_modular_pair, cochain, operators, verify_lambda_relations
from whakit.errors import AmbientCapExceeded, InputError
from whakit.grouplikes import s2_implementer_on_AT


@pytest.fixture(scope="module")
def z3_mp(z3):
    return check_modular_pair(z3, z3.dual_unit, z3.unit)


class TestModularPair:
    """sigma and s fix each other under the arrows and square to S^2."""

    def test_trivial_pair(self, z3_mp):
        assert z3_mp.modular
        assert z3_mp.involution
        assert z3_mp.report.passed

    def test_transposition_is_modular_but_not_involutive(self, s3):
        mp = check_modular_pair(s3, s3.dual_unit, s3.basis_vector(2))
        assert mp.modular
        assert not mp.involution
        assert not mp.report.entry("S^2 = sigma -> s (.) s^-1 <- sigma^-1").passed

    def test_s2_implementer_pair(self, m2q):
        t = s2_implementer_on_AT(m2q)
        mp = check_modular_pair(m2q, m2q.dual_unit, t)
        assert mp.modular

    def test_sigma_must_be_grouplike(self, z3):
        with pytest.raises(InputError, match="sigma"):
            check_modular_pair(z3, linalg.scale(z3.dual_unit, 2), z3.unit)

    def test_s_must_be_grouplike(self, z3):
        with pytest.raises(InputError, match="s is not"):
            check_modular_pair(z3, z3.dual_unit, z3.element([1, 1, 0]))


class TestCochains:
    """C^n = Delta^{n-1}(1) . A^(x n) with C^0 = A^L."""

    @pytest.mark.parametrize("n,dim", [(0, 1), (1, 3), (2, 9), (3, 27)])
    def test_group_algebra_cochains_are_full(self, z3, n, dim):
        assert cochain(z3, n).dim == dim

    def test_degree_zero_is_left_subalgebra(self, m2q):
        assert cochain(m2q, 0).space == m2q.left_subalgebra

    def test_degree_one_is_everything(self, m2q):
        assert cochain(m2q, 1).dim == 16

    def test_degree_two_is_proper(self, m2q):
        assert cochain(m2q, 2).dim < 16 ** 2

    def test_cap(self, m2q):
        with pytest.raises(AmbientCapExceeded):
            cochain(m2q, 3, cap=1000)

    def test_negative_degree(self, z3):
        with pytest.raises(InputError):
            cochain(z3, -1)


class TestOperators:
    """Faces, degeneracies and tau restricted to cochains."""

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_well_defined(self, z3, z3_mp, n):
        ops = operators(z3, z3_mp, n)
        assert ops.report.passed
        assert len(ops.faces) == (n + 1 if n else 0)
        assert len(ops.degeneracies) == n + 1
        assert ops.cyclic is not None

    def test_negative_degree(self, z3, z3_mp):
        with pytest.raises(InputError):
            operators(z3, z3_mp, -1)


class TestLambdaRelations:
    """The cyclic category relations on the cochain tower."""

    def test_group_algebra(self, z3, z3_mp):
        report = verify_lambda_relations(z3, z3_mp, max_degree=3)
        assert report.suite == "cyclic"
        assert report.passed, report.failures

    @pytest.mark.slow
    def test_matrix_pair(self, m2q):
        mp = check_modular_pair(m2q, m2q.dual_unit, s2_implementer_on_AT(m2q))
        report = verify_lambda_relations(m2q, mp, max_degree=2)
        assert report.passed, report.failures

    def test_non_involutive_pair_fails(self, s3):
        mp = check_modular_pair(s3, s3.dual_unit, s3.basis_vector(2))
        report = verify_lambda_relations(s3, mp, max_degree=2)
        assert not report.passed

    def test_negative_degree(self, z3, z3_mp):
        with pytest.raises(InputError):
            verify_lambda_relations(z3, z3_mp, max_degree=-1)
