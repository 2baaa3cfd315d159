"""Theories and databases D = (A, T)."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from logic import (
    Formula,
    Signature,
    Structure,
    dedupe,
    first_falsified,
    interprets,
    print_formula,
    symbol_names,
)
from logic.syntax import require_sentence
from shared.errors import CorrectnessError


@dataclass(frozen=True, slots=True)
class Theory:
    """Ordered, duplicate-free list of sentences."""

    sentences: tuple[Formula, ...] = ()

    def __post_init__(self) -> None:
        for f in self.sentences:
            require_sentence(f)
        object.__setattr__(self, "sentences", dedupe(self.sentences))

    @classmethod
    def of(cls, sentences: Iterable[Formula]) -> Theory:
        return cls(tuple(sentences))

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.sentences)

    def __len__(self) -> int:
        return len(self.sentences)

    def __contains__(self, item: object) -> bool:
        return item in self.sentences

    def symbol_names(self) -> frozenset[str]:
        names: set[str] = set()
        for f in self.sentences:
            names |= symbol_names(f)
        return frozenset(names)


@dataclass(frozen=True)
class Database:
    """A structure paired with a theory.

    Databases built by `make_database` are correct. Paper-mode deletions may
    produce databases whose structure falsifies some theory sentences; those
    sentences are listed in `theory_breaks`.
    """

    structure: Structure
    theory: Theory
    theory_breaks: tuple[Formula, ...] = field(default=(), compare=False)

    @property
    def sig(self) -> Signature:
        return self.structure.sig


@dataclass(frozen=True, slots=True)
class Correctness:
    """Result of a correctness check; falsy when a sentence is violated."""

    ok: bool
    witness: Formula | None = None

    def __bool__(self) -> bool:
        return self.ok


def make_database(a: Structure, t: Theory) -> Database:
    """Pair a structure with a theory that is true in it.

    Raises:
        CorrectnessError: naming the first theory sentence that uses symbols
            the structure does not interpret or that is false in it.
    """
    for f in t:
        if not interprets(a, f):
            raise CorrectnessError(
                f, f"theory sentence uses uninterpreted symbols: {print_formula(f)}"
            )
    violated = first_falsified(a, t)
    if violated is not None:
        raise CorrectnessError(violated)
    return Database(a, t)


def is_correct(d: Database) -> Correctness:
    violated = first_falsified(d.structure, d.theory)
    return Correctness(violated is None, violated)
