"""Signatures and the abstract syntax of first-order sentences with equality.

Formulas are immutable trees of frozen dataclasses. Equality between formulas
is plain structural equality, bound-variable names included; that is the
equality every set of formulas downstream deduplicates with.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import reduce

from shared.errors import ArityError, NotASentenceError
from shared.types import SymbolKind

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
VARIABLE_NAME = re.compile(r"[u-z][0-9]*")


@dataclass(frozen=True, order=True, slots=True)
class Symbol:
    """A constant (arity 0) or a relation (arity ≥ 1)."""

    name: str
    kind: SymbolKind
    arity: int

    def __post_init__(self) -> None:
        if not IDENTIFIER.fullmatch(self.name):
            raise ArityError(self.name, "not an identifier")
        if (self.kind is SymbolKind.constant) != (self.arity == 0):
            raise ArityError(self.name, f"{self.kind.value} cannot have arity {self.arity}")
        if self.arity < 0:
            raise ArityError(self.name, "negative arity")

    @classmethod
    def constant(cls, name: str) -> Symbol:
        return cls(name, SymbolKind.constant, 0)

    @classmethod
    def relation(cls, name: str, arity: int) -> Symbol:
        return cls(name, SymbolKind.relation, arity)

    @property
    def is_constant(self) -> bool:
        return self.kind is SymbolKind.constant

    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True, slots=True)
class Signature:
    """A finite set of symbols with pairwise distinct names, kept sorted by name."""

    symbols: tuple[Symbol, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.symbols)))
        names = [s.name for s in ordered]
        if len(names) != len(set(names)):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ArityError(dupes[0], "declared twice with different arities")
        object.__setattr__(self, "symbols", ordered)

    @classmethod
    def of(cls, symbols: Iterable[Symbol]) -> Signature:
        return cls(tuple(symbols))

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, str):
            return any(s.name == item for s in self.symbols)
        return item in self.symbols

    def get(self, name: str) -> Symbol | None:
        for symbol in self.symbols:
            if symbol.name == name:
                return symbol
        return None

    @property
    def constants(self) -> tuple[Symbol, ...]:
        return tuple(s for s in self.symbols if s.is_constant)

    @property
    def relations(self) -> tuple[Symbol, ...]:
        return tuple(s for s in self.symbols if not s.is_constant)

    def with_symbol(self, symbol: Symbol) -> Signature:
        if symbol in self.symbols:
            return self
        return Signature((*self.symbols, symbol))

    def without(self, name: str) -> Signature:
        return Signature(tuple(s for s in self.symbols if s.name != name))

    def union(self, other: Iterable[Symbol]) -> Signature:
        return Signature((*self.symbols, *other))


# --- Terms ---


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Const:
    name: str


Term = Var | Const


# --- Formulas ---


@dataclass(frozen=True, slots=True)
class Rel:
    """Atom R(t₁, …, tₙ)."""

    name: str
    args: tuple[Term, ...]


@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Not:
    body: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: Formula


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: Formula


Formula = Rel | Eq | Not | And | Or | Implies | Iff | Forall | Exists
Binary = And | Or | Implies | Iff
Quantifier = Forall | Exists


def is_variable_name(name: str) -> bool:
    """Unbound identifiers named u…z (optionally with digits) are variables."""
    return VARIABLE_NAME.fullmatch(name) is not None


def free_variables(f: Formula) -> frozenset[str]:
    """Variables with an occurrence not bound by an enclosing quantifier."""
    match f:
        case Rel(args=args):
            return frozenset(t.name for t in args if isinstance(t, Var))
        case Eq(left=left, right=right):
            return frozenset(t.name for t in (left, right) if isinstance(t, Var))
        case Not(body=body):
            return free_variables(body)
        case And() | Or() | Implies() | Iff():
            return free_variables(f.left) | free_variables(f.right)
        case Forall(var=var, body=body) | Exists(var=var, body=body):
            return free_variables(body) - {var}
    raise TypeError(f"not a formula: {f!r}")


def is_sentence(f: Formula) -> bool:
    return not free_variables(f)


def require_sentence(f: Formula) -> Formula:
    free = free_variables(f)
    if free:
        raise NotASentenceError(free)
    return f


def symbols_of(f: Formula) -> frozenset[Symbol]:
    """Every constant and relation symbol occurring in f, with its arity."""
    found: set[Symbol] = set()
    _collect_symbols(f, found)
    return frozenset(found)


def _collect_symbols(f: Formula, found: set[Symbol]) -> None:
    match f:
        case Rel(name=name, args=args):
            found.add(Symbol.relation(name, len(args)))
            found.update(Symbol.constant(t.name) for t in args if isinstance(t, Const))
        case Eq(left=left, right=right):
            found.update(Symbol.constant(t.name) for t in (left, right) if isinstance(t, Const))
        case Not(body=body) | Forall(body=body) | Exists(body=body):
            _collect_symbols(body, found)
        case And() | Or() | Implies() | Iff():
            _collect_symbols(f.left, found)
            _collect_symbols(f.right, found)


def symbol_names(f: Formula) -> frozenset[str]:
    return frozenset(s.name for s in symbols_of(f))


def signature_of(formulas: Iterable[Formula]) -> Signature:
    """Joint signature of several formulas.

    Raises:
        ArityError: if two formulas use one name with different arities.
    """
    collected: set[Symbol] = set()
    for f in formulas:
        collected |= symbols_of(f)
    return Signature(tuple(collected))


def conjoin(formulas: Iterable[Formula]) -> Formula | None:
    """Left-nested conjunction, None for an empty input."""
    items = list(formulas)
    if not items:
        return None
    return reduce(And, items)


def dedupe(formulas: Iterable[Formula]) -> tuple[Formula, ...]:
    """Drop structural duplicates, keeping first occurrences in order."""
    return tuple(dict.fromkeys(formulas))
