"""Unit tests for verification reports."""

import json

from sympy import QQ

from whakit import linalg
from whakit.report import AxiomReport


def diag(*values):
    n = len(values)
    return linalg.matrix([[QQ(values[i]) if i == j else QQ(0) for j in range(n)] for i in range(n)], QQ)


class TestAxiomReport:
    """Entries, witnesses and serialization."""

    def test_empty_report_passes(self):
        assert AxiomReport("empty").passed

    def test_check_equal_records_pass(self):
        report = AxiomReport("demo")
        assert report.check_equal("id = id", "identity maps", diag(1, 1), diag(1, 1))
        assert report.passed
        assert report.entry("id = id").witness is None

    def test_witness_is_decoded_column(self):
        report = AxiomReport("demo")
        lhs, rhs = diag(1, 1, 1, 1), diag(1, 1, 1, 2)
        assert not report.check_equal("maps agree", "demo", lhs, rhs, [2, 2])
        assert report.failures[0].witness == [1, 1]

    def test_vector_witness_uses_row(self):
        report = AxiomReport("demo")
        a = linalg.column([QQ(0), QQ(0), QQ(1)], QQ)
        b = linalg.column([QQ(0), QQ(0), QQ(0)], QQ)
        report.check_equal("vectors agree", "demo", a, b)
        assert report.failures[0].witness == [2]

    def test_shape_mismatch_fails(self):
        report = AxiomReport("demo")
        report.check_equal("shapes", "demo", diag(1), diag(1, 1))
        assert not report.passed
        assert "shape" in report.failures[0].detail

    def test_check_true_with_detail(self):
        report = AxiomReport("demo")
        report.check_true("found", "search", False, detail="nothing within bound 3")
        assert report.failures[0].witness == []
        assert report.failures[0].detail == "nothing within bound 3"

    def test_extend_prefixes(self):
        inner = AxiomReport("inner")
        inner.check_true("holds", "inner anchor", True)
        outer = AxiomReport("outer")
        outer.extend(inner, "sub: ")
        assert outer.entries[0].identity == "sub: holds"
        assert outer.entries[0].anchor == "inner anchor"

    def test_to_dict_sorted_by_identity(self):
        report = AxiomReport("demo")
        report.check_true("b", "x", True)
        report.check_true("a", "x", False)
        data = report.to_dict()
        assert data["suite"] == "demo"
        assert data["pass"] is False
        assert [e["identity"] for e in data["entries"]] == ["a", "b"]
        assert json.loads(report.to_json()) == data

    def test_summary(self):
        report = AxiomReport("demo")
        report.check_true("a", "x", True)
        report.check_true("b", "x", False)
        assert report.summary() == "demo: 1/2 identities hold"
