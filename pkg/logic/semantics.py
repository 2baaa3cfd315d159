"""Finite first-order structures and Tarskian truth evaluation."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from shared.errors import StructureError

from .syntax import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Rel,
    Signature,
    Symbol,
    Term,
    Var,
    require_sentence,
    symbols_of,
)


@dataclass(frozen=True, order=True, slots=True)
class Element:
    """A domain individual. Identity is the id; the label is for display."""

    id: int
    label: str

    def __str__(self) -> str:
        return self.label


Tuple = tuple[Element, ...]


@dataclass(frozen=True, eq=True)
class Structure:
    """A finite structure over `sig` with a nonempty ordered domain.

    Every constant of `sig` maps to a domain element and every relation of
    `sig` has an entry in `relations` (possibly empty).
    """

    sig: Signature
    domain: tuple[Element, ...]
    constants: Mapping[str, Element] = field(default_factory=dict)
    relations: Mapping[str, frozenset[Tuple]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.domain:
            raise StructureError("domain must be nonempty")
        ids = [e.id for e in self.domain]
        if len(ids) != len(set(ids)):
            raise StructureError("duplicate element id in domain")
        labels = [e.label for e in self.domain]
        if len(labels) != len(set(labels)):
            raise StructureError("duplicate element label in domain")
        members = set(self.domain)

        expected_constants = {s.name for s in self.sig.constants}
        if set(self.constants) != expected_constants:
            raise StructureError(
                f"constant interpretations {sorted(self.constants)} "
                f"do not match signature constants {sorted(expected_constants)}"
            )
        for name, element in self.constants.items():
            if element not in members:
                raise StructureError(f"constant {name} maps outside the domain")

        expected_relations = {s.name: s.arity for s in self.sig.relations}
        if set(self.relations) != set(expected_relations):
            raise StructureError(
                f"relation interpretations {sorted(self.relations)} "
                f"do not match signature relations {sorted(expected_relations)}"
            )
        for name, tuples in self.relations.items():
            for t in tuples:
                if len(t) != expected_relations[name]:
                    raise StructureError(f"tuple of wrong length in {name}")
                if not members.issuperset(t):
                    raise StructureError(f"tuple of {name} mentions an element outside the domain")

        object.__setattr__(self, "constants", dict(sorted(self.constants.items())))
        object.__setattr__(
            self, "relations", {k: frozenset(v) for k, v in sorted(self.relations.items())}
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.sig,
                self.domain,
                tuple(self.constants.items()),
                tuple(self.relations.items()),
            )
        )

    def element(self, label: str) -> Element:
        for e in self.domain:
            if e.label == label:
                return e
        raise StructureError(f"no element labelled {label!r}")

    def has_label(self, label: str) -> bool:
        return any(e.label == label for e in self.domain)

    def next_id(self) -> int:
        return max(e.id for e in self.domain) + 1

    def interpretation(self, name: str) -> Element | frozenset[Tuple] | None:
        """The interpretation of a symbol, None when it is not in the signature."""
        if name in self.constants:
            return self.constants[name]
        return self.relations.get(name)

    def interprets_symbols(self, symbols: Iterable[Symbol]) -> bool:
        return all(s in self.sig.symbols for s in symbols)


def interprets(a: Structure, f: Formula) -> bool:
    """True iff every symbol of f is interpreted by a with the same arity."""
    return a.interprets_symbols(symbols_of(f))


def evaluate(a: Structure, f: Formula) -> bool:
    """Truth of the sentence f in a.

    Formulas mentioning symbols a does not interpret evaluate to False.

    Raises:
        NotASentenceError: if f has free variables.
    """
    require_sentence(f)
    if not interprets(a, f):
        return False
    return _holds(a, f, {})


def models_theory(a: Structure, t: Iterable[Formula]) -> bool:
    return all(evaluate(a, f) for f in t)


def first_falsified(a: Structure, t: Iterable[Formula]) -> Formula | None:
    for f in t:
        if not evaluate(a, f):
            return f
    return None


def _denote(a: Structure, t: Term, env: Mapping[str, Element]) -> Element:
    if isinstance(t, Var):
        return env[t.name]
    return a.constants[t.name]


def _holds(a: Structure, f: Formula, env: dict[str, Element]) -> bool:
    match f:
        case Rel(name=name, args=args):
            return tuple(_denote(a, t, env) for t in args) in a.relations[name]
        case Eq(left=left, right=right):
            return _denote(a, left, env) == _denote(a, right, env)
        case Not(body=body):
            return not _holds(a, body, env)
        case And(left=left, right=right):
            return _holds(a, left, env) and _holds(a, right, env)
        case Or(left=left, right=right):
            return _holds(a, left, env) or _holds(a, right, env)
        case Implies(left=left, right=right):
            return not _holds(a, left, env) or _holds(a, right, env)
        case Iff(left=left, right=right):
            return _holds(a, left, env) == _holds(a, right, env)
        case Forall(var=var, body=body):
            return all(_holds(a, body, {**env, var: e}) for e in a.domain)
        case Exists(var=var, body=body):
            return any(_holds(a, body, {**env, var: e}) for e in a.domain)
    raise TypeError(f"not a formula: {f!r}")


def canonical_encoding(a: Structure) -> bytes:
    """Deterministic byte encoding of signature, domain labels and interpretations.

    Elements are encoded by their position in the domain, so isomorphic but
    differently ordered or labelled structures encode differently.
    """
    position = {e: i for i, e in enumerate(a.domain)}
    payload = {
        "sig": [[s.name, s.kind.value, s.arity] for s in a.sig],
        "domain": [e.label for e in a.domain],
        "constants": {name: position[e] for name, e in a.constants.items()},
        "relations": {
            name: sorted([position[e] for e in t] for t in tuples)
            for name, tuples in a.relations.items()
        },
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")


def _labelled(value: Element | frozenset[Tuple] | None) -> object:
    if isinstance(value, Element):
        return value.label
    if value is None:
        return None
    return frozenset(tuple(e.label for e in t) for t in value)


def changed_symbols(a: Structure, b: Structure) -> list[str]:
    """Names whose interpretation differs between a and b, sorted.

    Elements are compared by label, so structures built separately compare
    as expected.
    """
    names = {s.name for s in a.sig} | {s.name for s in b.sig}
    changed = []
    for name in sorted(names):
        if a.sig.get(name) != b.sig.get(name) or _labelled(a.interpretation(name)) != _labelled(
            b.interpretation(name)
        ):
            changed.append(name)
    return changed
