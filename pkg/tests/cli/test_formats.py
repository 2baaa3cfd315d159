"""Tests for the database, operation-script and deduction file formats."""

from pathlib import Path

import pytest

from cli.corpus import PaperFixtures
from cli.formats import (
    dump_database,
    dump_deduction,
    dump_ops,
    dump_structure,
    load_database,
    ops_from_script,
    parse_database,
    parse_deduction,
    parse_ops,
)
from engine import Database, entails
from logic import canonical_encoding, parse_sentence
from shared.errors import ArityError, FormulaSyntaxError, IllegalStepError, StructureError
from shared.types import OpKind


class TestDatabaseFormat:
    """Tests for `.fodb` reading and writing."""

    def test_bundled_example(self, data_dir: Path) -> None:
        """The cities-and-streets file loads with its declared signature."""
        d = load_database(data_dir / "example_2_2.fodb")
        assert [s.name for s in d.sig] == ["C", "E", "H", "a", "l", "s"]
        assert [e.label for e in d.structure.domain] == ["S_", "L_", "A_"]

    def test_dump_then_parse(self, d0: Database) -> None:
        """A dumped database reads back to the same structure and theory."""
        again = parse_database(dump_database(d0))
        assert canonical_encoding(again.structure) == canonical_encoding(d0.structure)
        assert again.theory == d0.theory

    def test_dump_layout(self, d0: Database) -> None:
        """Declarations, domain and bindings each get their own block."""
        text = dump_structure(d0.structure)
        assert text.startswith("signature { const a, l, s rel C/1, E/1, H/2 }\n")
        assert "domain { S_, L_, A_ }" in text
        assert "  H = {(S_, A_), (L_, A_)}" in text

    def test_empty_relation_round_trip(self, d0: Database) -> None:
        """Countermodels with empty relations can be read back."""
        verdict = entails(d0.theory, parse_sentence("exists x E(x)", d0.sig))
        assert verdict.witness is not None
        text = dump_structure(verdict.witness)
        assert "  E = {}" in text
        again = parse_database(text)
        assert canonical_encoding(again.structure) == canonical_encoding(verdict.witness)

    def test_domain_required(self) -> None:
        """Every database has a domain section."""
        with pytest.raises(StructureError):
            parse_database("signature { const c }")

    def test_repeated_section(self) -> None:
        """Sections appear at most once."""
        with pytest.raises(StructureError):
            parse_database("domain { X } domain { Y }")

    def test_unknown_element(self) -> None:
        """Bindings name domain elements."""
        with pytest.raises(StructureError):
            parse_database("signature { const c } domain { X } interpret { c = Y }")

    def test_undeclared_symbol(self) -> None:
        """Only declared symbols are interpreted."""
        with pytest.raises(StructureError):
            parse_database("domain { X } interpret { c = X }")

    def test_constant_bound_to_set(self) -> None:
        """Constants denote single elements."""
        with pytest.raises(ArityError):
            parse_database("signature { const c } domain { X } interpret { c = {X} }")

    def test_syntax_error(self) -> None:
        """Malformed text reports a syntax error."""
        with pytest.raises(FormulaSyntaxError):
            parse_database("domain { X, }")


class TestOpsFormat:
    """Tests for `.ops` scripts."""

    def test_parse_lines(self) -> None:
        """Each line becomes one unresolved operation."""
        lines = parse_ops("insert const b = A_\ndelete rel E tuple (B_)  # cleanup\n")
        assert [(line.kind, line.constant, line.name) for line in lines] == [
            (OpKind.insert, True, "b"),
            (OpKind.delete, False, "E"),
        ]

    def test_empty_script_is_singleton(self, d0: Database) -> None:
        """Only comments: the update (D₀)."""
        u = ops_from_script("# nothing\n", d0)
        assert len(u) == 1
        assert u.base is d0

    def test_dump_matches_script(self, paper: PaperFixtures) -> None:
        """Operations print back as the script lines they came from."""
        assert dump_ops(paper.street_update.ops) == (
            "insert const b = A_\n"
            "insert rel E (new B_)\n"
            "delete const b reinterpret B_\n"
            "delete rel E tuple (B_)\n"
        )

    def test_dumped_script_replays(self, d0: Database, paper: PaperFixtures) -> None:
        """Replaying a dumped script gives the same final structure."""
        u = ops_from_script(dump_ops(paper.deletions.ops), d0)
        assert canonical_encoding(u.final.structure) == canonical_encoding(
            paper.deletions.final.structure
        )

    def test_illegal_step_index(self, d0: Database) -> None:
        """The failing line is named by its position."""
        with pytest.raises(IllegalStepError) as info:
            ops_from_script("insert const b = A_\ndelete rel Z drop\n", d0)
        assert info.value.index == 1

    def test_theory_symbol_drop_rejected(self, d0: Database) -> None:
        """E occurs in the theory."""
        with pytest.raises(IllegalStepError) as info:
            ops_from_script("delete rel E drop\n", d0)
        assert info.value.index == 0

    def test_syntax_error(self, d0: Database) -> None:
        """Unknown verbs are syntax errors."""
        with pytest.raises(FormulaSyntaxError):
            ops_from_script("move const b = A_\n", d0)


class TestDeductionFormat:
    """Tests for `.ded` deductions."""

    def test_bundled_street_deduction(self, paper: PaperFixtures) -> None:
        """Premises, one intermediate step and the conclusion."""
        ded = paper.street_deduction
        assert len(ded.premises) == 2
        assert ded.steps == (paper.sentence("C(b) -> ~E(b)"),)
        assert ded.conclusion == paper.sentence("~E(b)")
        assert len(ded.support) == 3

    def test_dump_then_parse(self, paper: PaperFixtures) -> None:
        """A dumped deduction reads back unchanged."""
        ded = paper.street_deduction
        assert parse_deduction(dump_deduction(ded), paper.d0.sig) == ded

    def test_conclusion_only(self) -> None:
        """Premises and steps are optional."""
        ded = parse_deduction("conclusion { forall x (x = x) }")
        assert ded.premises == ()
        assert ded.steps == ()

    def test_conclusion_required(self) -> None:
        """A deduction without a conclusion is malformed."""
        with pytest.raises(FormulaSyntaxError):
            parse_deduction("premises { E(a) }")
