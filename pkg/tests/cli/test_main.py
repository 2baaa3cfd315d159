"""Tests for the informativity command line."""

from pathlib import Path

import pytest

from cli.main import EXIT_CAVEATED, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main

_ENV_VARS = [
    "INFORMATIVITY_CONFIG",
    "INFORMATIVITY_MODE",
    "INFORMATIVITY_BOUND",
    "INFORMATIVITY_DEPTH",
    "INFORMATIVITY_FRESH",
    "INFORMATIVITY_MAX_NODES",
    "INFORMATIVITY_LOG_LEVEL",
]


@pytest.fixture(autouse=True)
def isolated(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """No settings file or environment overrides leak into a run."""
    for name in _ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def db(data_dir: Path) -> str:
    return str(data_dir / "example_2_2.fodb")


@pytest.fixture
def triple(data_dir: Path) -> list[str]:
    return [str(data_dir / name) for name in ("update_D0.ops", "update_D.ops", "update_Dpp.ops")]


class TestCheck:
    """Tests for the check command."""

    def test_correct_database(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """Size of the domain and the theory are reported."""
        assert main(["check", db]) == EXIT_OK
        assert capsys.readouterr().out == "correct: 3 element(s), 4 sentence(s)\n"

    def test_incorrect_database(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """A false theory sentence is a validation error."""
        path = tmp_path / "bad.fodb"
        path.write_text("signature { rel P/1 } domain { X } theory { P(X) }", encoding="utf-8")
        assert main(["check", str(path)]) == EXIT_INVALID
        assert capsys.readouterr().err.startswith("invalid:")

    def test_missing_file(self, tmp_path: Path) -> None:
        """Unreadable input is a usage error."""
        assert main(["check", str(tmp_path / "missing.fodb")]) == EXIT_USAGE


class TestEval:
    """Tests for the eval command."""

    def test_true(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """Sao Paulo is a city."""
        assert main(["eval", db, "--formula", "C(s)"]) == EXIT_OK
        assert capsys.readouterr().out == "true\n"

    def test_out_of_signature(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """b is not interpreted, so E(b) is false and flagged."""
        assert main(["eval", db, "--formula", "E(b)"]) == EXIT_OK
        assert capsys.readouterr().out == "false\nwarning: out-of-signature\n"

    def test_syntax_error(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """Parse errors exit with 1."""
        assert main(["eval", db, "--formula", "C(s) &"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("error: syntax error")


class TestApply:
    """Tests for the apply command."""

    def test_writes_final_database(self, db: str, data_dir: Path, tmp_path: Path) -> None:
        """The final database of the deletion script is written to the output file."""
        out = tmp_path / "final.fodb"
        assert main(["apply", db, str(data_dir / "update_Dp.ops"), "-o", str(out)]) == EXIT_OK
        text = out.read_text(encoding="utf-8")
        assert "  s = A_" in text
        assert "  C = {L_}" in text
        assert "theory {" in text

    def test_stdout(self, db: str, data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Without -o the database goes to stdout."""
        assert main(["apply", db, str(data_dir / "update_D.ops")]) == EXIT_OK
        assert "  b = A_" in capsys.readouterr().out

    def test_strict_mode_rejects_deletions(self, db: str, data_dir: Path) -> None:
        """Breaking the theory is illegal under strict mode."""
        argv = ["apply", db, str(data_dir / "update_Dp.ops"), "--mode", "strict"]
        assert main(argv) == EXIT_INVALID


class TestEntails:
    """Tests for the entails command."""

    def test_countermodel_printed(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """The witness follows the verdict."""
        assert main(["entails", db, "--formula", "exists x E(x)"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("fails\nsignature {")
        assert "domain { e0 }" in out

    def test_holds(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """The bound flag is reported back."""
        assert main(["entails", db, "--formula", "exists x C(x)", "--bound", "2"]) == EXIT_OK
        assert capsys.readouterr().out == "holds-up-to-bound (bound 2)\n"

    def test_node_cap_from_settings(
        self, db: str, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """An unknown verdict exits with 3."""
        config = tmp_path / "informativity.yaml"
        config.write_text("engine:\n  max_nodes: 1\n", encoding="utf-8")
        assert main(["entails", db, "--formula", "exists x E(x)"]) == EXIT_CAVEATED
        assert capsys.readouterr().out == "unknown: node cap 1 reached\n"

    def test_invalid_settings(self, db: str, tmp_path: Path) -> None:
        """Out-of-range settings are a usage error."""
        config = tmp_path / "custom.yaml"
        config.write_text("engine:\n  bound: 0\n", encoding="utf-8")
        argv = ["--config", str(config), "entails", db, "--formula", "C(s)"]
        assert main(argv) == EXIT_USAGE

    def test_invalid_log_level(
        self, db: str, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """An unknown level name is reported as a usage error."""
        monkeypatch.setenv("INFORMATIVITY_LOG_LEVEL", "LOUD")
        assert main(["entails", db, "--formula", "C(s)"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("error:")


class TestSearch:
    """Tests for the search command."""

    def test_found(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """The norm and the operations of the witness are printed."""
        assert main(["search", db, "--formula", "E(b)"]) == EXIT_OK
        assert capsys.readouterr().out == "norm: 1\ninsert const b = A_\n"

    def test_not_found(self, db: str, capsys: pytest.CaptureFixture[str]) -> None:
        """Nothing within the bounds is not an error."""
        argv = ["search", db, "--formula", "C(a) & ~C(a)", "--depth", "1", "--fresh", "0"]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == "no satisfactory update within depth 1 (fresh 0)\n"


class TestMetrics:
    """Tests for the complexity, relevancy and informativity commands."""

    def test_informativity_of_deduction(
        self, db: str, triple: list[str], data_dir: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """The street deduction over the three updates."""
        deduction = str(data_dir / "deduction_street.ded")
        argv = ["informativity", "--db", db, "--updates", *triple, "--deduction", deduction]
        assert main(argv) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "informativity: 8/3"
        assert lines[1] == "mode: paper  bound: 4"
        assert "chosen update: 2" in lines
        assert "relevant: {forall x (C(x) -> ~E(x)), ~E(b)}" in lines

    def test_complexity_of_formula(
        self, db: str, triple: list[str], capsys: pytest.CaptureFixture[str]
    ) -> None:
        """~E(b) is reached after four steps."""
        argv = ["complexity", "--db", db, "--updates", *triple, "--formula", "~E(b)"]
        assert main(argv) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("complexity: 4\n")
        assert "out-of-signature" in out

    def test_relevancy_of_formula(
        self, db: str, triple: list[str], capsys: pytest.CaptureFixture[str]
    ) -> None:
        """A single proposition not entailed by T is fully relevant."""
        argv = ["relevancy", "--db", db, "--updates", *triple, "--formula", "~E(b)"]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out.startswith("relevancy: 1\n")

    def test_formula_and_deduction_exclusive(
        self, db: str, triple: list[str], data_dir: Path
    ) -> None:
        """Exactly one target is accepted."""
        deduction = str(data_dir / "deduction_street.ded")
        argv = ["relevancy", "--db", db, "--updates", *triple]
        assert main([*argv, "--formula", "E(a)", "--deduction", deduction]) == EXIT_USAGE


class TestUsage:
    """Tests for argument handling."""

    def test_no_command(self) -> None:
        """A command is required."""
        assert main([]) == EXIT_USAGE

    def test_help(self, capsys: pytest.CaptureFixture[str]) -> None:
        """--help exits cleanly."""
        assert main(["--help"]) == EXIT_OK
        assert "paper-report" in capsys.readouterr().out
