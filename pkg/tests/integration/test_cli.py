"""Integration tests driving the command line through click's runner."""

import json

import pytest
from click.testing import CliRunner

from whakit import fileformat, linalg, zoo
from whakit.cli import cli


pytestmark = pytest.mark.integration


def document(output: str) -> dict:
    """The JSON object of a command; log lines on stderr may surround it."""
    lines = output.splitlines()
    start = lines.index("{")
    end = len(lines) - 1 - lines[::-1].index("}")
    return json.loads("\n".join(lines[start:end + 1]))


@pytest.fixture
def runner():
    return CliRunner()


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


class TestValidateCommand:
    """validate on zoo entries and files."""

    def test_zoo_entry(self, runner):
        result = runner.invoke(cli, ["validate", "zoo:Z2"])
        assert result.exit_code == 0, result.output
        doc = document(result.output)
        assert doc["command"] == "validate"
        assert doc["pass"] is True
        suites = [r["suite"] for r in doc["reports"]]
        assert suites == sorted(suites)

    def test_failing_file(self, runner, tmp_path):
        data = fileformat.to_dict(zoo.cyclic_group(2))
        del data["antipode"]
        data["comult"].append([1, 0, 0, "1"])
        result = runner.invoke(cli, ["validate", write_json(tmp_path / "broken.json", data)])
        assert result.exit_code == 1
        doc = document(result.output)
        assert doc["pass"] is False
        wba = next(r for r in doc["reports"] if r["suite"] == "wba")
        assert any(not e["passed"] and e["identity"] == "coassociativity" for e in wba["entries"])

    def test_malformed_file(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"format": "whakit/1"', encoding="utf-8")
        result = runner.invoke(cli, ["validate", str(path)])
        assert result.exit_code == 2
        assert document(result.output)["error"] == "FormatError"

    def test_unknown_zoo_entry(self, runner):
        result = runner.invoke(cli, ["validate", "zoo:Q8"])
        assert result.exit_code == 2
        assert document(result.output)["error"] == "InputError"

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["validate", str(tmp_path / "absent.json")])
        assert result.exit_code == 2


class TestAntipodeCommand:
    """Rebuilding an antipode from integrals."""

    def test_rebuilds_and_writes(self, runner, tmp_path):
        data = fileformat.to_dict(zoo.cyclic_group(3))
        del data["antipode"]
        source = write_json(tmp_path / "z3.json", data)
        out = tmp_path / "z3_s.json"
        result = runner.invoke(cli, ["antipode", source, "-o", str(out)])
        assert result.exit_code == 0, result.output
        W = fileformat.read(out)
        assert linalg.equal(linalg.mul(W.S, W.basis_vector(1)), W.basis_vector(2))

    def test_given_antipode_is_compared(self, runner):
        result = runner.invoke(cli, ["antipode", "zoo:Z3"])
        assert result.exit_code == 0, result.output
        suites = [r["suite"] for r in document(result.output)["reports"]]
        assert "antipode-uniqueness" in suites

    def test_no_integral(self, runner):
        result = runner.invoke(cli, ["antipode", "zoo:LZ"])
        assert result.exit_code == 1


class TestStructureCommands:
    """Commands that run whole suite groups."""

    @pytest.mark.parametrize("command", ["integrals", "modules", "hopfmod", "radford", "grouplike"])
    def test_group_algebra(self, runner, command):
        result = runner.invoke(cli, [command, "zoo:Z3"])
        assert result.exit_code == 0, result.output
        assert document(result.output)["command"] == command

    def test_hopf_suites_need_an_antipode(self, runner):
        result = runner.invoke(cli, ["hopfmod", "zoo:LZ"])
        assert result.exit_code == 2

    def test_dualize(self, runner, tmp_path):
        out = tmp_path / "dual.json"
        result = runner.invoke(cli, ["dualize", "zoo:S3", "-o", str(out)])
        assert result.exit_code == 0, result.output
        assert fileformat.read(out).dim == 6

    def test_grouplike_element(self, runner, tmp_path):
        element = write_json(tmp_path / "g.json", {"element": [0, 1, 0]})
        result = runner.invoke(cli, ["grouplike", "zoo:Z3", "--element", element])
        assert result.exit_code == 0, result.output
        assert document(result.output)["result"]["kind"] == "both"

    def test_grouplike_options_exclusive(self, runner, tmp_path):
        element = write_json(tmp_path / "g.json", {"element": [0, 1, 0]})
        result = runner.invoke(cli, ["grouplike", "zoo:Z3", "--element", element, "--trivial-from", element])
        assert result.exit_code == 2

    def test_cyclic(self, runner):
        result = runner.invoke(cli, ["cyclic", "zoo:Z3", "--max-degree", "2"])
        assert result.exit_code == 0, result.output
        suites = {r["suite"] for r in document(result.output)["reports"]}
        assert suites == {"cyclic", "modular-pair"}

    def test_double(self, runner):
        result = runner.invoke(cli, ["double", "zoo:Z2"])
        assert result.exit_code == 0, result.output
        assert document(result.output)["result"]["dim"] == 4


class TestZooCommand:
    """Listing, writing and checking registry entries."""

    def test_list(self, runner):
        result = runner.invoke(cli, ["zoo", "--list"])
        assert result.exit_code == 0
        names = [e["name"] for e in document(result.output)["result"]["entries"]]
        assert names == list(zoo.ZOO)
        entries = {e["name"]: e for e in document(result.output)["result"]["entries"]}
        assert entries["XP"]["limits"] == {"max_degree": 1}

    def test_write_then_validate(self, runner, tmp_path):
        result = runner.invoke(cli, ["zoo", "Z2", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        path = tmp_path / "Z2.json"
        assert document(result.output)["result"]["written"] == [str(path)]
        assert runner.invoke(cli, ["validate", str(path)]).exit_code == 0

    def test_check(self, runner):
        result = runner.invoke(cli, ["zoo", "Z2", "--check"])
        assert result.exit_code == 0, result.output
        assert all(r["suite"].startswith("Z2:") for r in document(result.output)["reports"])

    def test_needs_a_name(self, runner):
        assert runner.invoke(cli, ["zoo"]).exit_code == 2


class TestConfigOption:
    """Configuration files reach the suites."""

    def test_config_file(self, runner, tmp_path):
        config = write_json(tmp_path / "config.json", {"max_degree": 1, "unknown": True})
        result = runner.invoke(cli, ["--config", config, "cyclic", "zoo:Z2"])
        assert result.exit_code == 0, result.output
