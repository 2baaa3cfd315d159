"""Finite countermodel search over partial interpretations.

Interpretations are enumerated depth-first: constants first (sorted by name,
element 0 before element 1, …), then relations (sorted by name, tuples in
lexicographic order, absent before present). Sentences are evaluated with
Kleene's three-valued logic over the partial interpretation, so a branch is
cut as soon as a theory sentence is decided false or the target decided true.
The first countermodel found is the first one in enumeration order.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

from logic import (
    And,
    Const,
    Element,
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
    Structure,
    Term,
    symbol_names,
)

logger = logging.getLogger(__name__)

Truth = bool | None


@dataclass
class _Partial:
    size: int
    constants: dict[str, int] = field(default_factory=dict)
    relations: dict[str, dict[tuple[int, ...], bool]] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class _Slot:
    name: str
    key: tuple[int, ...] | None  # None for a constant

    def choices(self, size: int) -> range | tuple[bool, bool]:
        return range(size) if self.key is None else (False, True)


@dataclass(frozen=True)
class SearchResult:
    """Countermodel, if any, plus whether the node cap cut the search short."""

    witness: Structure | None
    nodes: int
    capped: bool = False


class _NodeCapReached(Exception):
    pass


def _denote(t: Term, p: _Partial, env: dict[str, int]) -> int | None:
    if isinstance(t, Const):
        return p.constants.get(t.name)
    return env[t.name]


def _and(values: Iterable[Truth]) -> Truth:
    result: Truth = True
    for v in values:
        if v is False:
            return False
        if v is None:
            result = None
    return result


def _or(values: Iterable[Truth]) -> Truth:
    result: Truth = False
    for v in values:
        if v is True:
            return True
        if v is None:
            result = None
    return result


def _not(v: Truth) -> Truth:
    return None if v is None else not v


def evaluate_partial(f: Formula, p: _Partial, env: dict[str, int] | None = None) -> Truth:
    """Kleene evaluation; None means not yet decided by the partial interpretation."""
    env = env or {}
    match f:
        case Rel(name=name, args=args):
            values = [_denote(t, p, env) for t in args]
            if any(v is None for v in values):
                return None
            return p.relations.get(name, {}).get(tuple(v for v in values if v is not None))
        case Eq(left=left, right=right):
            lv, rv = _denote(left, p, env), _denote(right, p, env)
            if lv is None or rv is None:
                return None
            return lv == rv
        case Not(body=body):
            return _not(evaluate_partial(body, p, env))
        case And(left=left, right=right):
            return _and([evaluate_partial(left, p, env), evaluate_partial(right, p, env)])
        case Or(left=left, right=right):
            return _or([evaluate_partial(left, p, env), evaluate_partial(right, p, env)])
        case Implies(left=left, right=right):
            return _or([_not(evaluate_partial(left, p, env)), evaluate_partial(right, p, env)])
        case Iff(left=left, right=right):
            lv, rv = evaluate_partial(left, p, env), evaluate_partial(right, p, env)
            if lv is None or rv is None:
                return None
            return lv == rv
        case Forall(var=var, body=body):
            return _and(evaluate_partial(body, p, {**env, var: i}) for i in range(p.size))
        case Exists(var=var, body=body):
            return _or(evaluate_partial(body, p, {**env, var: i}) for i in range(p.size))
    raise TypeError(f"not a formula: {f!r}")


class _Search:
    def __init__(
        self, sig: Signature, theory: tuple[Formula, ...], target: Formula, max_nodes: int
    ) -> None:
        self.sig = sig
        self.sentences = (*theory, target)
        self.target_index = len(theory)
        self.max_nodes = max_nodes
        self.nodes = 0
        mentions = [symbol_names(f) for f in self.sentences]
        self.affected = {
            s.name: [i for i, names in enumerate(mentions) if s.name in names] for s in sig
        }

    def _slots(self, size: int) -> list[_Slot]:
        slots = [_Slot(s.name, None) for s in self.sig.constants]
        for s in self.sig.relations:
            slots.extend(
                _Slot(s.name, key) for key in itertools.product(range(size), repeat=s.arity)
            )
        return slots

    def _status(self, values: list[Truth]) -> str:
        theory = values[: self.target_index]
        if any(v is False for v in theory) or values[self.target_index] is True:
            return "prune"
        if all(v is True for v in theory) and values[self.target_index] is False:
            return "found"
        return "open"

    def run(self, size: int) -> Structure | None:
        p = _Partial(size, relations={s.name: {} for s in self.sig.relations})
        slots = self._slots(size)
        values = [evaluate_partial(f, p) for f in self.sentences]
        if self._dfs(p, slots, 0, values):
            return self._witness(p)
        return None

    def _dfs(self, p: _Partial, slots: list[_Slot], index: int, values: list[Truth]) -> bool:
        status = self._status(values)
        if status == "found":
            return True
        if status == "prune" or index == len(slots):
            return False
        slot = slots[index]
        for choice in slot.choices(p.size):
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise _NodeCapReached
            self._assign(p, slot, choice)
            updated = list(values)
            for i in self.affected[slot.name]:
                if updated[i] is None:
                    updated[i] = evaluate_partial(self.sentences[i], p)
            if self._dfs(p, slots, index + 1, updated):
                return True
            self._unassign(p, slot)
        return False

    @staticmethod
    def _assign(p: _Partial, slot: _Slot, choice: int | bool) -> None:
        if slot.key is None:
            p.constants[slot.name] = int(choice)
        else:
            p.relations[slot.name][slot.key] = bool(choice)

    @staticmethod
    def _unassign(p: _Partial, slot: _Slot) -> None:
        if slot.key is None:
            del p.constants[slot.name]
        else:
            del p.relations[slot.name][slot.key]

    def _witness(self, p: _Partial) -> Structure:
        # Unassigned slots take their first choice: element 0, tuple absent.
        domain = tuple(Element(i, f"e{i}") for i in range(p.size))
        constants = {s.name: domain[p.constants.get(s.name, 0)] for s in self.sig.constants}
        relations = {
            s.name: frozenset(
                tuple(domain[i] for i in key)
                for key, present in p.relations[s.name].items()
                if present
            )
            for s in self.sig.relations
        }
        return Structure(self.sig, domain, constants, relations)


def find_countermodel(
    sig: Signature,
    theory: tuple[Formula, ...],
    target: Formula,
    max_domain: int,
    max_nodes: int,
) -> SearchResult:
    """First structure over sig, by size then enumeration order, modelling
    theory and falsifying target."""
    search = _Search(sig, theory, target, max_nodes)
    try:
        for size in range(1, max_domain + 1):
            witness = search.run(size)
            logger.debug("domain size %d searched, %d node(s) so far", size, search.nodes)
            if witness is not None:
                return SearchResult(witness, search.nodes)
    except _NodeCapReached:
        return SearchResult(None, search.nodes, capped=True)
    return SearchResult(None, search.nodes)
