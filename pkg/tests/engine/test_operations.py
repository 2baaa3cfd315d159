"""Tests for insertions, deletions and successor enumeration."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cli.formats import parse_database
from engine import (
    Database,
    ElementRef,
    InsertTuple,
    OperationDescriptor,
    RemoveTuple,
    apply_deletion,
    apply_insertion,
    apply_operation,
    drop_symbol,
    enumerate_successors,
    free_for,
    fresh_labels,
    insert_constant,
    insert_tuple,
    is_correct,
    reinterpret_constant,
    remove_tuple,
)
from logic import Element, Structure, Symbol, canonical_encoding, evaluate, parse_sentence
from shared.errors import ArityError, OperationError, ProvisoViolation
from shared.types import OpKind, OpMode
from tests.strategies import databases

SMALL = """
signature { const c  rel P/1 }
domain { X, Y }
interpret {
  c = Y
  P = {X}
}
"""

ONE = """
signature { const c }
domain { X }
interpret { c = X }
"""


@pytest.fixture
def small() -> Database:
    return parse_database(SMALL)


@pytest.fixture
def one() -> Database:
    return parse_database(ONE)


class TestDescriptors:
    """Tests for OperationDescriptor construction and printing."""

    @pytest.mark.parametrize(
        ("op", "text"),
        [
            (insert_constant("b", "A_"), "insert const b = A_"),
            (insert_constant("b", "B_", fresh=True), "insert const b = new B_"),
            (insert_tuple("E", ElementRef("B_", fresh=True)), "insert rel E (new B_)"),
            (insert_tuple("H", "L_", "A_"), "insert rel H (L_, A_)"),
            (reinterpret_constant("s", "A_"), "delete const s reinterpret A_"),
            (remove_tuple("H", "S_", "A_"), "delete rel H tuple (S_, A_)"),
            (drop_symbol(Symbol.constant("a")), "delete const a drop"),
            (drop_symbol(Symbol.relation("E", 1)), "delete rel E drop"),
        ],
    )
    def test_script_line(self, op: OperationDescriptor, text: str) -> None:
        """Descriptors print as `.ops` lines."""
        assert str(op) == text

    def test_payload_must_match_kind(self) -> None:
        """A tuple removal is not an insertion payload."""
        with pytest.raises(OperationError):
            OperationDescriptor(OpKind.insert, Symbol.relation("E", 1), RemoveTuple(("A_",)))

    def test_tuple_length_must_match_arity(self) -> None:
        """H is binary."""
        with pytest.raises(ArityError):
            OperationDescriptor(
                OpKind.insert, Symbol.relation("H", 2), InsertTuple((ElementRef("A_"),))
            )


class TestInsertion:
    """Tests for apply_insertion on the cities-and-streets database."""

    def test_new_constant(self, d0: Database) -> None:
        """b is added to the signature and bound to the street."""
        d1 = apply_insertion(d0, insert_constant("b", "A_"))
        assert "b" in d1.sig
        assert d1.structure.constants["b"] == d0.structure.element("A_")
        assert d1.structure.domain == d0.structure.domain
        assert evaluate(d1.structure, parse_sentence("E(b)", d1.sig))

    def test_fresh_street(self, d0: Database) -> None:
        """A fresh element may be created as a new street."""
        d1 = apply_insertion(d0, insert_constant("b", "A_"))
        d2 = apply_insertion(d1, insert_tuple("E", ElementRef("B_", fresh=True)))
        assert d2.structure.has_label("B_")
        assert len(d2.structure.domain) == 4
        assert is_correct(d2)

    def test_fresh_element_outside_theory_rejected(self, d0: Database) -> None:
        """A new element that is neither city nor street breaks the theory."""
        d1 = apply_insertion(d0, insert_constant("b", "A_"))
        with pytest.raises(ProvisoViolation) as info:
            apply_insertion(d1, insert_constant("b", "B_", fresh=True))
        assert info.value.sentence == parse_sentence("forall x (C(x) | E(x))")

    def test_proviso_checked_for_tuples(self, d0: Database) -> None:
        """London cannot become a street."""
        with pytest.raises(ProvisoViolation) as info:
            apply_insertion(d0, insert_tuple("E", "L_"))
        assert info.value.sentence == parse_sentence("~E(l)", d0.sig)

    def test_proviso_applies_in_strict_mode(self, d0: Database) -> None:
        """Strict mode checks insertions the same way."""
        with pytest.raises(ProvisoViolation):
            apply_insertion(d0, insert_tuple("E", "L_"), OpMode.strict)

    def test_identity_insertions_accepted(
        self, d0: Database, caplog: pytest.LogCaptureFixture
    ) -> None:
        """Existing bindings and tuples give back the same database, with a warning."""
        assert apply_insertion(d0, insert_constant("s", "S_")) is d0
        assert apply_insertion(d0, insert_tuple("E", "A_")) is d0
        assert "identity insertion" in caplog.text

    def test_rebinding_interpreted_constant_rejected(self, d0: Database) -> None:
        """a is already interpreted and a = S_ is not the identity."""
        with pytest.raises(OperationError) as info:
            apply_insertion(d0, insert_constant("a", "S_"))
        assert not isinstance(info.value, ProvisoViolation)

    def test_fresh_label_collision(self, d0: Database) -> None:
        """Fresh labels must be new."""
        with pytest.raises(OperationError):
            apply_insertion(d0, insert_tuple("E", ElementRef("A_", fresh=True)))

    def test_unknown_label(self, d0: Database) -> None:
        """Existing references must name elements."""
        with pytest.raises(OperationError):
            apply_insertion(d0, insert_tuple("E", "X_"))

    def test_arity_clash(self, d0: Database) -> None:
        """H is declared binary."""
        with pytest.raises(ArityError):
            apply_insertion(d0, insert_tuple("H", "A_"))

    def test_new_relation(self, d0: Database) -> None:
        """An undeclared relation enters the signature with one tuple."""
        d1 = apply_insertion(d0, insert_tuple("Z", "S_"))
        assert Symbol.relation("Z", 1) in d1.sig
        assert d1.structure.relations["Z"] == {(d0.structure.element("S_"),)}

    def test_wrong_kind(self, d0: Database) -> None:
        """Deletions are not insertions."""
        with pytest.raises(OperationError):
            apply_insertion(d0, remove_tuple("E", "A_"))


class TestDeletion:
    """Tests for apply_deletion."""

    def test_reinterpret_records_breaks(self, d0: Database) -> None:
        """Moving s onto the street falsifies C(s) in paper mode."""
        d1 = apply_deletion(d0, reinterpret_constant("s", "A_"))
        assert d1.structure.constants["s"] == d0.structure.element("A_")
        assert d1.theory_breaks == (parse_sentence("C(s)", d0.sig),)
        assert d1.theory == d0.theory

    def test_strict_mode_raises(self, d0: Database) -> None:
        """Strict mode keeps the proviso for deletions."""
        with pytest.raises(ProvisoViolation) as info:
            apply_deletion(d0, reinterpret_constant("s", "A_"), OpMode.strict)
        assert info.value.sentence == parse_sentence("C(s)", d0.sig)

    def test_harmless_deletion_has_no_breaks(self, d0: Database) -> None:
        """The theory never mentions a."""
        d1 = apply_deletion(d0, reinterpret_constant("a", "S_"), OpMode.strict)
        assert d1.theory_breaks == ()
        assert is_correct(d1)

    def test_remove_tuple(self, d0: Database) -> None:
        """S_ keeps being a city without a street."""
        d1 = apply_deletion(d0, remove_tuple("H", "S_", "A_"))
        s, a = d0.structure.element("S_"), d0.structure.element("A_")
        assert (s, a) not in d1.structure.relations["H"]
        assert d1.theory_breaks == (parse_sentence("forall x (C(x) -> exists y H(x,y))", d0.sig),)

    def test_identity_reinterpretation_rejected(self, d0: Database) -> None:
        """Reinterpreting onto the current value changes nothing."""
        with pytest.raises(OperationError):
            apply_deletion(d0, reinterpret_constant("s", "S_"))

    def test_absent_tuple_rejected(self, d0: Database) -> None:
        """Only present tuples can be removed."""
        with pytest.raises(OperationError):
            apply_deletion(d0, remove_tuple("E", "S_"))

    def test_symbol_outside_signature_rejected(self, d0: Database) -> None:
        """Nothing to delete."""
        with pytest.raises(OperationError):
            apply_deletion(d0, remove_tuple("Z", "S_"))

    def test_theory_symbol_cannot_be_dropped(self, d0: Database) -> None:
        """C occurs in the theory."""
        with pytest.raises(OperationError):
            apply_deletion(d0, drop_symbol(Symbol.relation("C", 1)))

    def test_drop_keeps_referenced_elements(self, d0: Database) -> None:
        """A_ is still a street after a is dropped."""
        d1 = apply_deletion(d0, drop_symbol(Symbol.constant("a")))
        assert "a" not in d1.sig
        assert d1.structure.domain == d0.structure.domain

    def test_drop_removes_free_elements(self, small: Database) -> None:
        """Y is only named by c."""
        d1 = apply_deletion(small, drop_symbol(Symbol.constant("c")))
        assert [e.label for e in d1.structure.domain] == ["X"]
        assert "c" not in d1.sig

    def test_drop_cannot_empty_domain(self, small: Database) -> None:
        """Dropping P after c would leave no elements."""
        d1 = apply_deletion(small, drop_symbol(Symbol.constant("c")))
        with pytest.raises(OperationError):
            apply_deletion(d1, drop_symbol(Symbol.relation("P", 1)))

    def test_dispatch(self, d0: Database) -> None:
        """apply_operation picks the operation by kind."""
        assert "b" in apply_operation(d0, insert_constant("b", "A_")).sig
        assert apply_operation(d0, remove_tuple("H", "L_", "A_")).theory_breaks


class TestFreeFor:
    """Tests for free_for and fresh_labels."""

    def test_free_for(self, small: Database) -> None:
        """An element is free for a symbol when nothing else refers to it."""
        a = small.structure
        assert free_for(a, a.element("Y"), Symbol.constant("c"))
        assert not free_for(a, a.element("X"), Symbol.constant("c"))
        assert free_for(a, a.element("X"), Symbol.relation("P", 1))

    def test_shared_element_not_free(self, d0: Database) -> None:
        """S_ is named by s and used by C and H."""
        a = d0.structure
        assert not free_for(a, a.element("S_"), Symbol.constant("s"))

    def test_fresh_labels(self, d0: Database) -> None:
        """N0, N1, … in order."""
        assert fresh_labels(d0.structure, 2) == ["N0", "N1"]
        assert fresh_labels(d0.structure, 0) == []

    def test_fresh_labels_skip_used(self) -> None:
        """Labels already in the domain are skipped."""
        d = parse_database("domain { N0, X }")
        assert fresh_labels(d.structure, 2) == ["N1", "N2"]


class TestEnumerateSuccessors:
    """Tests for enumerate_successors."""

    def test_nothing_to_change(self, one: Database) -> None:
        """c has no other target and dropping it would empty the domain."""
        assert enumerate_successors(one) == []

    def test_pool_and_fresh_order(self, one: Database) -> None:
        """Pool symbols are inserted over existing elements, then fresh ones."""
        pool = [Symbol.relation("P", 1)]
        ops = [str(op) for op, _ in enumerate_successors(one, fresh_budget=1, symbol_pool=pool)]
        assert ops == ["insert rel P (X)", "insert rel P (new N0)"]

    def test_pool_ignores_declared_names(self, one: Database) -> None:
        """A pool symbol already in the signature is not inserted again."""
        assert enumerate_successors(one, symbol_pool=[Symbol.constant("c")]) == []

    def test_successors_are_distinct_and_new(self, d0: Database) -> None:
        """No identity steps and no repeated structures."""
        successors = enumerate_successors(d0, fresh_budget=1)
        encodings = [canonical_encoding(d.structure) for _, d in successors]
        assert len(set(encodings)) == len(encodings)
        assert canonical_encoding(d0.structure) not in encodings

    def test_successors_match_their_operation(self, d0: Database) -> None:
        """Each successor is its operation applied to d0."""
        for op, successor in enumerate_successors(d0, fresh_budget=1):
            expected = apply_operation(d0, op, warn=False)
            assert canonical_encoding(expected.structure) == canonical_encoding(successor.structure)

    def test_strict_mode_keeps_theory(self, d0: Database) -> None:
        """Strict successors are correct; paper mode also allows breaking deletions."""
        strict = enumerate_successors(d0, OpMode.strict)
        paper = enumerate_successors(d0, OpMode.paper)
        assert all(is_correct(d) for _, d in strict)
        assert len(strict) < len(paper)
        assert any(d.theory_breaks for _, d in paper)

    def test_deterministic(self, d0: Database) -> None:
        """Two runs give the same operations in the same order."""
        first = [op for op, _ in enumerate_successors(d0, fresh_budget=1)]
        second = [op for op, _ in enumerate_successors(d0, fresh_budget=1)]
        assert first == second


def _referenced_by_others(a: Structure, e: Element, name: str) -> bool:
    if any(k != name and v == e for k, v in a.constants.items()):
        return True
    return any(k != name and any(e in t for t in ts) for k, ts in a.relations.items())


class TestSuccessorProperties:
    """Every successor changes one symbol and keeps referenced elements."""

    @settings(max_examples=1000, deadline=None)
    @given(databases(max_size=3), st.integers(min_value=0, max_value=1), st.data())
    def test_single_symbol_change(self, d: Database, fresh: int, data: st.DataObject) -> None:
        """Symbols other than the operated one keep their declaration and interpretation."""
        successors = enumerate_successors(d, OpMode.paper, fresh)
        assume(successors)
        op, successor = data.draw(st.sampled_from(successors))
        a, b = d.structure, successor.structure
        names = {s.name for s in a.sig} | {s.name for s in b.sig}
        for name in names - {op.symbol.name}:
            assert a.sig.get(name) == b.sig.get(name)
            assert a.interpretation(name) == b.interpretation(name)
        assert a.interpretation(op.symbol.name) != b.interpretation(op.symbol.name)

    @settings(max_examples=200, deadline=None)
    @given(databases(max_size=3))
    def test_drop_removes_only_free_elements(self, d: Database) -> None:
        """Elements some other symbol refers to survive a drop."""
        a = d.structure
        for symbol in a.sig:
            try:
                dropped = apply_deletion(d, drop_symbol(symbol), warn=False).structure
            except OperationError:
                continue
            removed = set(a.domain) - set(dropped.domain)
            kept = set(dropped.domain)
            for e in a.domain:
                if _referenced_by_others(a, e, symbol.name):
                    assert e in kept
            for e in removed:
                assert e == a.interpretation(symbol.name) or any(
                    e in t for t in a.relations.get(symbol.name, ())
                )
            assert symbol.name not in dropped.sig
