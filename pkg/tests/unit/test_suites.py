"""Unit tests for the suites behind the command line."""

import pytest

from whakit import linalg, zoo
from whakit.config import Config
from whakit.errors import InputError, VerificationError
from whakit.suites import (SUITES, check_entry, check_manifest, default_modular_pair, require_pair, run_antipode,
                           run_cyclic, run_hopfmod, run_integrals, run_modules, run_radford, run_validate)


@pytest.fixture
def config():
    return Config().override(max_degree=2)


class TestValidate:
    """The validate command's reports."""

    def test_hopf_algebra(self, z3, config):
        reports = run_validate(z3, config)
        assert [r.suite for r in reports][:2] == ["wba", "wba-identities"]
        assert len(reports) == 6
        assert all(r.passed for r in reports)

    def test_bialgebra_only(self, lz, config):
        reports = run_validate(lz, config)
        assert len(reports) == 2
        assert all(r.passed for r in reports)


class TestIntegrals:
    """Integral search, dual pairs and the antipode route."""

    def test_group_algebra(self, z3, config):
        assert all(r.passed for r in run_integrals(z3, config))

    def test_no_integral(self, lz, config):
        reports = run_integrals(lz, config)
        assert len(reports) == 1
        assert not reports[0].passed
        assert reports[0].entry("non-degenerate left integral found").detail.startswith("no non-degenerate")

    def test_antipode_recovered(self, z3, config):
        W, reports = run_antipode(z3.base, config)
        assert all(r.passed for r in reports)
        assert linalg.equal(W.S, z3.S)

    def test_antipode_absent(self, lz, config):
        W, reports = run_antipode(lz, config)
        assert W is None
        assert not reports[0].passed

    def test_require_pair(self, z3, lz, config):
        assert require_pair(z3, config).report.passed
        with pytest.raises(VerificationError, match="no non-degenerate left integral"):
            require_pair(lz, config)


class TestAntipodeSuites:
    """Suites that only make sense with an antipode."""

    @pytest.mark.parametrize("suite", [run_hopfmod, run_radford, run_cyclic])
    def test_need_antipode(self, lz, config, suite):
        with pytest.raises(InputError, match="antipode"):
            suite(lz, config)

    def test_grouplikes_need_antipode(self, lz, config):
        with pytest.raises(InputError):
            SUITES["grouplikes"](lz, config)

    def test_modules_without_antipode(self, lz, config):
        assert all(r.passed for r in run_modules(lz, config))

    def test_radford_group_algebra(self, s3, config):
        assert all(r.passed for r in run_radford(s3, config))

    def test_radford_includes_unimodularity(self, z3, config):
        reports = {r.suite: r for r in run_radford(z3, config)}
        assert reports["unimodularity"].passed
        assert reports["unimodularity"].entry("direct search and criterion agree").passed


class TestCyclic:
    """Modular pairs for the cyclic suite."""

    def test_default_pair(self, z3, config):
        mp = default_modular_pair(z3, config)
        assert linalg.equal(mp.s.g, z3.unit)
        assert linalg.equal(mp.sigma.g, z3.dual_unit)

    def test_default_run(self, z3, config):
        assert all(r.passed for r in run_cyclic(z3, config))

    def test_explicit_pair(self, z3, config):
        reports = run_cyclic(z3, config, z3.dual_unit, z3.unit)
        assert all(r.passed for r in reports)

    def test_half_a_pair(self, z3, config):
        with pytest.raises(InputError, match="both"):
            run_cyclic(z3, config, sigma=z3.dual_unit)


class TestManifests:
    """Zoo manifests dispatch through the suite table."""

    def test_every_manifest_suite_is_known(self):
        for entry in zoo.ZOO.values():
            assert set(entry.manifest) <= set(SUITES)

    def test_z2_manifest(self, z2, config):
        reports = check_manifest(z2, zoo.get_entry("Z2").manifest, config)
        assert all(r.passed for r in reports), [r.summary() for r in reports if not r.passed]

    def test_entry_limits_cap_the_config(self):
        entry = zoo.get_entry("XP")
        config = Config().override(max_degree=3)
        assert config.capped(**entry.limits).get("max_degree") == 1
        assert config.get("max_degree") == 3

    def test_check_entry_builds(self, config):
        reports = check_entry(zoo.get_entry("Z2"), config)
        assert all(r.passed for r in reports)
        assert "double" in {r.suite for r in reports}

    @pytest.mark.slow
    @pytest.mark.parametrize("name", list(zoo.ZOO))
    def test_every_entry_passes_its_manifest(self, name):
        reports = check_entry(zoo.get_entry(name))
        assert reports
        assert all(r.passed for r in reports), [r.summary() for r in reports if not r.passed]

    def test_unknown_suite(self, z2, config):
        with pytest.raises(InputError, match="unknown suite"):
            check_manifest(z2, ["wba", "nope"], config)
