"""Unit tests for integrals, dual pairs and the integral-built antipode."""

from dataclasses import replace

import pytest

from whakit import linalg
from whakit.errors import InputError, VerificationError
from whakit.integrals import (Side, antipode_presentations, check_integral_identities, dual_pair,
                              find_nondegenerate_left_integral, integral_coproduct_twist, integral_projections,
                              integral_space, is_nondegenerate, larson_sweedler, larson_sweedler_antipode,
                              unimodularity)
from whakit.report import AxiomReport


SLOW_XP = pytest.param("xp", marks=pytest.mark.slow)
HOPF = ["z3", "s3", "m2q", "f2m2", SLOW_XP]


class TestIntegralSpaces:
    """Left and right integrals solved exactly."""

    def test_group_algebra_integral(self, z3):
        space = integral_space(z3, Side.LEFT)
        assert space.dim == 1
        assert space.contains(z3.element([1, 1, 1]))

    def test_left_zero_monoid_has_no_left_integrals(self, lz):
        assert integral_space(lz, Side.LEFT).dim == 0
        assert find_nondegenerate_left_integral(lz, 3) is None

    def test_search_finds_sum_of_group(self, z3):
        l = find_nondegenerate_left_integral(z3, 1)
        assert linalg.equal(l, z3.element([1, 1, 1]))

    def test_search_bound_must_be_positive(self, z3):
        with pytest.raises(InputError):
            find_nondegenerate_left_integral(z3, 0)

    def test_unit_is_degenerate(self, z3):
        assert not is_nondegenerate(z3, z3.unit)[0]


class TestDualPair:
    """lambda -> l = 1 and the right-handed data."""

    @pytest.mark.parametrize("name", HOPF)
    def test_zoo_dual_pairs(self, name, request):
        assert request.getfixturevalue(f"{name}_pair").report.passed

    def test_group_algebra_dual_integral_is_delta(self, z3, z3_pair):
        assert linalg.equal(z3_pair.lam, z3.basis_vector(0))
        assert z3_pair.r is not None

    def test_rejects_degenerate(self, z3):
        with pytest.raises(InputError, match="degenerate"):
            dual_pair(z3, z3.unit)

    def test_rejects_non_integral(self, z3):
        # R_x is diagonal with nonzero entries
        with pytest.raises(InputError, match="not a left integral"):
            dual_pair(z3, z3.element([1, 1, 2]))


class TestLarsonSweedler:
    """The antipode rebuilt from integrals agrees with the known one."""

    @pytest.mark.parametrize("name", HOPF)
    def test_rebuilt_antipode_is_unique(self, name, request):
        A = request.getfixturevalue(name)
        pair = request.getfixturevalue(f"{name}_pair")
        W, report = larson_sweedler(A.base, pair)
        assert report.passed
        assert linalg.equal(W.S, A.S)

    def test_strict_variant_raises_on_bad_pair(self, z3, z3_pair):
        failing = AxiomReport("dual-pair")
        failing.check_true("lambda -> l = 1", "dual pair of left integrals", False)
        bad = replace(z3_pair, report=failing)
        with pytest.raises(VerificationError):
            larson_sweedler_antipode(z3.base, bad)

    def test_strict_variant_returns_hopf_algebra(self, s3, s3_pair):
        assert linalg.equal(larson_sweedler_antipode(s3.base, s3_pair).S, s3.S)


class TestIntegralIdentities:
    """Projections onto integrals, antipode presentations and unimodularity."""

    @pytest.mark.parametrize("name", HOPF)
    def test_identities(self, name, request):
        A = request.getfixturevalue(name)
        pair = request.getfixturevalue(f"{name}_pair")
        assert check_integral_identities(A).passed
        assert integral_projections(A).report.passed
        assert antipode_presentations(A, pair).passed
        assert integral_coproduct_twist(A, pair).passed

    @pytest.mark.parametrize("name", ["z3", "s3", "m2q"])
    def test_unimodularity_routes_agree(self, name, request):
        assert unimodularity(request.getfixturevalue(name)).report.passed

    def test_group_algebra_is_unimodular(self, s3):
        result = unimodularity(s3)
        assert result.unimodular
        assert result.two_sided is not None
        assert result.criterion is True
