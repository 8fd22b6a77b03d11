"""Unit tests for the Drinfeld double."""

from dataclasses import replace

import pytest

from whakit import linalg
from whakit.double import (Reading, build_double, compare_double_readings, double_integral_certificate,
                           double_projection)
from whakit.errors import InputError
from whakit.wba import check_wba
from whakit.wha import check_wha


class TestBuildDouble:
    """D(A) as a certified quotient of A (x) Ahat."""

    @pytest.mark.parametrize("name,pair,dim", [("z2", "z2_pair", 4), ("z3", "z3_pair", 9)])
    def test_group_algebra_doubles(self, name, pair, dim, request):
        A, p = request.getfixturevalue(name), request.getfixturevalue(pair)
        D = build_double(A, p)
        assert D.dim == dim
        assert D.report.passed, D.report.failures
        assert check_wba(D.algebra).passed
        assert check_wha(D.algebra).passed

    def test_auto_records_selected_reading(self, z2, z2_pair):
        D = build_double(z2, z2_pair)
        assert D.report.entry(f"reading selected: {D.reading.value}").passed

    def test_explicit_reading(self, z2, z2_pair):
        D = build_double(z2, z2_pair, Reading.B_LEGS)
        assert D.reading is Reading.B_LEGS

    def test_unknown_reading(self, z2, z2_pair):
        with pytest.raises(InputError, match="unknown multiplication reading"):
            build_double(z2, z2_pair, "sideways")

    def test_element_embeds_unit(self, z3, z3_pair):
        D = build_double(z3, z3_pair)
        assert linalg.equal(D.element(z3.unit, z3.dual_unit), D.algebra.unit)

    @pytest.mark.slow
    def test_matrix_pair_double(self, m2q, m2q_pair):
        D = build_double(m2q, m2q_pair)
        assert D.report.passed, D.report.failures
        assert D.dim == linalg.rank(double_projection(m2q))
        assert double_integral_certificate(D, m2q_pair).passed


class TestReadings:
    """Both readings reported side by side."""

    def test_keys(self, z2, z2_pair):
        reports = compare_double_readings(z2, z2_pair)
        assert set(reports) == {"b-legs", "literal"}

    def test_commutative_readings_agree(self, z2, z2_pair):
        reports = compare_double_readings(z2, z2_pair)
        assert reports["b-legs"].passed
        assert reports["literal"].passed


class TestDoubleIntegral:
    """The double is unimodular with integral D(l (x) S-hat(lambda))."""

    @pytest.mark.parametrize("name,pair", [("z2", "z2_pair"), ("z3", "z3_pair")])
    def test_certificate(self, name, pair, request):
        A, p = request.getfixturevalue(name), request.getfixturevalue(pair)
        D = build_double(A, p)
        report = double_integral_certificate(D, p)
        assert report.passed, report.failures
        assert report.entry("rank P-hat = dim D").passed
        assert report.entry("Sweedler map into D injective on D-hat").passed

    def test_degenerate_element_fails(self, z2, z2_pair):
        """The unit of Z2 has a rank-one hit map, so its Sweedler map cannot reach all of D."""
        D = build_double(z2, z2_pair)
        report = double_integral_certificate(D, replace(z2_pair, l=z2.unit))
        assert not report.passed
        assert not report.entry("Sweedler map into D injective on D-hat").passed
        assert report.entry("rank P-hat = dim D").passed
