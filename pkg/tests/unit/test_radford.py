"""Unit tests for the Nakayama automorphism, the Radford formula and the antipode order."""

import pytest

from whakit import linalg
from whakit.errors import InputError
from whakit.grouplikes import distinguished
from whakit.radford import antipode_order, gauge_check, nakayama_lambda, radford_check, radford_power


PAIRS = [("z2", "z2_pair"), ("z3", "z3_pair"), ("s3", "s3_pair"), ("m2q", "m2q_pair"), ("f2m2", "f2m2_pair"),
         pytest.param("xp", "xp_pair", marks=pytest.mark.slow)]


class TestNakayama:
    """theta with lambda(ab) = lambda(b theta(a))."""

    @pytest.mark.parametrize("name,pair", PAIRS)
    def test_three_routes_agree(self, name, pair, request):
        A, p = request.getfixturevalue(name), request.getfixturevalue(pair)
        result = nakayama_lambda(A, p)
        assert result.report.passed, result.report.failures

    def test_group_algebra_theta_is_identity(self, s3, s3_pair):
        assert linalg.equal(nakayama_lambda(s3, s3_pair).theta, s3.identity)

    def test_theta_twists_lambda(self, m2q, m2q_pair):
        theta = nakayama_lambda(m2q, m2q_pair).theta
        lam = linalg.transpose(m2q_pair.lam)
        for i in range(m2q.dim):
            for j in range(m2q.dim):
                a, b = m2q.basis_vector(i), m2q.basis_vector(j)
                assert linalg.scalar(linalg.mul(lam, m2q.product(a, b))) == \
                    linalg.scalar(linalg.mul(lam, m2q.product(b, linalg.mul(theta, a))))


class TestRadford:
    """S^4 as conjugation by the distinguished grouplikes."""

    @pytest.mark.parametrize("name,pair", PAIRS)
    def test_formula(self, name, pair, request):
        A, p = request.getfixturevalue(name), request.getfixturevalue(pair)
        assert radford_check(A, p).passed

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_iterated_formula(self, m2q, m2q_pair, m):
        report = radford_power(m2q, m2q_pair, m)
        assert report.passed, report.failures

    def test_power_must_be_positive(self, z3, z3_pair):
        with pytest.raises(InputError):
            radford_power(z3, z3_pair, 0)


class TestAntipodeOrder:
    """Bounded searches for the strict and inner order of S."""

    @pytest.mark.parametrize("name,strict", [("z2", 1), ("z3", 2), ("s3", 2)])
    def test_group_algebras(self, name, strict, request):
        result = antipode_order(request.getfixturevalue(name))
        assert result.strict_order == strict
        assert result.inner_order == 1
        assert result.report.passed

    def test_matrix_pair_over_f2_has_finite_order(self, f2m2):
        result = antipode_order(f2m2)
        assert result.strict_order == 6
        assert result.inner_order == 1
        assert result.report.passed

    @pytest.mark.slow
    def test_matrix_pair_is_inner_but_not_finite(self, m2q):
        result = antipode_order(m2q, max_m=24)
        assert result.strict_order is None
        assert result.inner_order == 1
        assert m2q.trivial_subalgebra.contains(result.inner_witness.g)
        assert result.report.entry("S^4 = y (.) y^-1").passed


class TestGauge:
    """Regauging the integral by a left grouplike of the dual."""

    @pytest.mark.parametrize("name,pair", [("z3", "z3_pair"), ("m2q", "m2q_pair")])
    def test_gauge_by_sigma(self, name, pair, request):
        A, p = request.getfixturevalue(name), request.getfixturevalue(pair)
        report = gauge_check(A, p, distinguished(A, p).sigma)
        assert report.passed, report.failures

    def test_gauge_by_counit_keeps_integral(self, z3, z3_pair):
        report = gauge_check(z3, z3_pair, distinguished(z3, z3_pair).sigma)
        assert report.entry("gauged integral non-degenerate").passed
        assert report.entry("unimodular iff sigma is trivial").passed
