"""Insertion and deletion of a single symbol's interpretation.

An operation changes the interpretation of exactly one symbol. Insertions add
a constant binding or one relation tuple, possibly creating fresh elements.
Deletions reinterpret a constant, remove one relation tuple, or drop a symbol
from the signature together with the elements only that symbol referenced.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from logic import Element, Signature, Structure, Symbol, canonical_encoding, evaluate
from logic.semantics import Tuple
from shared.errors import ArityError, OperationError, ProvisoViolation
from shared.types import OpKind, OpMode

from .database import Database

logger = logging.getLogger(__name__)

FRESH_PREFIX = "N"


@dataclass(frozen=True, slots=True)
class ElementRef:
    """An existing element named by label, or a fresh element to be created."""

    label: str
    fresh: bool = False

    def __str__(self) -> str:
        return f"new {self.label}" if self.fresh else self.label


# --- Payloads ---


@dataclass(frozen=True, slots=True)
class BindConstant:
    target: ElementRef


@dataclass(frozen=True, slots=True)
class InsertTuple:
    args: tuple[ElementRef, ...]


@dataclass(frozen=True, slots=True)
class ReinterpretConstant:
    target: str


@dataclass(frozen=True, slots=True)
class RemoveTuple:
    args: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class DropSymbol:
    pass


Payload = BindConstant | InsertTuple | ReinterpretConstant | RemoveTuple | DropSymbol

_SHAPES: dict[tuple[OpKind, bool], tuple[type, ...]] = {
    (OpKind.insert, True): (BindConstant,),
    (OpKind.insert, False): (InsertTuple,),
    (OpKind.delete, True): (ReinterpretConstant, DropSymbol),
    (OpKind.delete, False): (RemoveTuple, DropSymbol),
}


@dataclass(frozen=True, slots=True)
class OperationDescriptor:
    """One structural operation, printable as an `.ops` script line."""

    kind: OpKind
    symbol: Symbol
    payload: Payload

    def __post_init__(self) -> None:
        allowed = _SHAPES[(self.kind, self.symbol.is_constant)]
        if not isinstance(self.payload, allowed):
            raise OperationError(
                f"{type(self.payload).__name__} is not a {self.kind.value} payload "
                f"for {self.symbol.kind.value} {self.symbol.name}"
            )
        if isinstance(self.payload, InsertTuple | RemoveTuple):
            if len(self.payload.args) != self.symbol.arity:
                raise ArityError(
                    self.symbol.name,
                    f"arity {self.symbol.arity}, tuple of length {len(self.payload.args)}",
                )

    def __str__(self) -> str:
        s = self.symbol
        word = "const" if s.is_constant else "rel"
        match self.payload:
            case BindConstant(target=target):
                return f"insert const {s.name} = {target}"
            case InsertTuple(args=args):
                return f"insert rel {s.name} ({', '.join(str(a) for a in args)})"
            case ReinterpretConstant(target=target):
                return f"delete const {s.name} reinterpret {target}"
            case RemoveTuple(args=args):
                return f"delete rel {s.name} tuple ({', '.join(args)})"
            case DropSymbol():
                return f"delete {word} {s.name} drop"
        raise TypeError(f"unknown payload {self.payload!r}")


def insert_constant(name: str, target: str, *, fresh: bool = False) -> OperationDescriptor:
    return OperationDescriptor(
        OpKind.insert, Symbol.constant(name), BindConstant(ElementRef(target, fresh))
    )


def insert_tuple(name: str, *args: ElementRef | str) -> OperationDescriptor:
    refs = tuple(a if isinstance(a, ElementRef) else ElementRef(a) for a in args)
    return OperationDescriptor(OpKind.insert, Symbol.relation(name, len(refs)), InsertTuple(refs))


def reinterpret_constant(name: str, target: str) -> OperationDescriptor:
    return OperationDescriptor(
        OpKind.delete, Symbol.constant(name), ReinterpretConstant(target)
    )


def remove_tuple(name: str, *args: str) -> OperationDescriptor:
    return OperationDescriptor(OpKind.delete, Symbol.relation(name, len(args)), RemoveTuple(args))


def drop_symbol(symbol: Symbol) -> OperationDescriptor:
    return OperationDescriptor(OpKind.delete, symbol, DropSymbol())


# --- Helpers ---


def _rebuild(
    a: Structure,
    *,
    sig: Signature | None = None,
    domain: tuple[Element, ...] | None = None,
    constants: dict[str, Element] | None = None,
    relations: dict[str, frozenset[Tuple]] | None = None,
) -> Structure:
    return Structure(
        sig if sig is not None else a.sig,
        domain if domain is not None else a.domain,
        constants if constants is not None else dict(a.constants),
        relations if relations is not None else dict(a.relations),
    )


def _check_symbol(a: Structure, symbol: Symbol) -> Symbol | None:
    declared = a.sig.get(symbol.name)
    if declared is not None and declared != symbol:
        raise ArityError(symbol.name, f"declared as {declared}, operation uses {symbol}")
    return declared


def _resolve_refs(a: Structure, refs: Iterable[ElementRef]) -> tuple[list[Element], list[Element]]:
    """Map refs to elements, creating fresh ones. Returns (resolved, created)."""
    created: dict[str, Element] = {}
    resolved: list[Element] = []
    next_id = a.next_id()
    for ref in refs:
        if not ref.fresh:
            resolved.append(_lookup(a, ref.label))
            continue
        if a.has_label(ref.label):
            raise OperationError(f"fresh label {ref.label} collides with an existing element")
        if ref.label not in created:
            created[ref.label] = Element(next_id, ref.label)
            next_id += 1
        resolved.append(created[ref.label])
    return resolved, list(created.values())


def _lookup(a: Structure, label: str) -> Element:
    if not a.has_label(label):
        raise OperationError(f"no element labelled {label}")
    return a.element(label)


def _check_proviso(a: Structure, d: Database) -> None:
    for f in d.theory:
        if not evaluate(a, f):
            raise ProvisoViolation(f)


# --- Insertion ---


def apply_insertion(
    d: Database, op: OperationDescriptor, mode: OpMode = OpMode.paper, *, warn: bool = True
) -> Database:
    """Insert a constant binding or a relation tuple.

    The theory must stay true in the new structure in both modes. Inserting
    a constant that is already interpreted is only legal as the identity
    operation; re-inserting a tuple that is already present is likewise the
    identity. Identity insertions are accepted with a warning.

    Raises:
        OperationError: wrong operation kind, unknown or colliding labels,
            or rebinding an interpreted constant.
        ProvisoViolation: if a theory sentence becomes false.
        ArityError: if the symbol clashes with the signature.
    """
    if op.kind is not OpKind.insert:
        raise OperationError(f"not an insertion: {op}")
    a = d.structure
    declared = _check_symbol(a, op.symbol)
    name = op.symbol.name

    if isinstance(op.payload, BindConstant):
        (target,), created = _resolve_refs(a, [op.payload.target])
        if declared is not None:
            if a.constants[name] == target:
                if warn:
                    logger.warning("identity insertion accepted: %s", op)
                return d
            rebound = _rebuild(
                a, domain=a.domain + tuple(created), constants={**a.constants, name: target}
            )
            _check_proviso(rebound, d)
            raise OperationError(
                f"constant {name} is already interpreted; only the identity insertion is allowed"
            )
        new = _rebuild(
            a,
            sig=a.sig.with_symbol(op.symbol),
            domain=a.domain + tuple(created),
            constants={**a.constants, name: target},
        )
    elif isinstance(op.payload, InsertTuple):
        resolved, created = _resolve_refs(a, op.payload.args)
        row = tuple(resolved)
        current = a.relations.get(name, frozenset())
        if declared is not None and row in current:
            if warn:
                logger.warning("identity insertion accepted: %s", op)
            return d
        new = _rebuild(
            a,
            sig=a.sig.with_symbol(op.symbol),
            domain=a.domain + tuple(created),
            relations={**a.relations, name: current | {row}},
        )
    else:
        raise OperationError(f"not an insertion payload: {op.payload!r}")

    _check_proviso(new, d)
    return Database(new, d.theory)


# --- Deletion ---


def free_for(a: Structure, e: Element, sigma: Symbol) -> bool:
    """True iff no symbol other than sigma refers to e."""
    for name, value in a.constants.items():
        if name != sigma.name and value == e:
            return False
    for name, tuples in a.relations.items():
        if name != sigma.name and any(e in t for t in tuples):
            return False
    return True


def apply_deletion(
    d: Database, op: OperationDescriptor, mode: OpMode = OpMode.paper, *, warn: bool = True
) -> Database:
    """Reinterpret a constant, remove a tuple, or drop a symbol.

    In strict mode the theory must stay true. In paper mode falsified theory
    sentences are recorded on the result as `theory_breaks` instead.

    Raises:
        OperationError: wrong kind, symbol not in the signature, identity
            reinterpretation, absent tuple, dropping a symbol the theory
            uses, or emptying the domain.
        ProvisoViolation: strict mode only.
    """
    if op.kind is not OpKind.delete:
        raise OperationError(f"not a deletion: {op}")
    a = d.structure
    if _check_symbol(a, op.symbol) is None:
        raise OperationError(f"{op.symbol} is not in the signature")
    name = op.symbol.name

    match op.payload:
        case ReinterpretConstant(target=label):
            target = _lookup(a, label)
            if a.constants[name] == target:
                raise OperationError(f"{name} already denotes {label}")
            new = _rebuild(a, constants={**a.constants, name: target})
        case RemoveTuple(args=labels):
            row = tuple(_lookup(a, label) for label in labels)
            current = a.relations[name]
            if row not in current:
                raise OperationError(f"({', '.join(labels)}) is not in {name}")
            new = _rebuild(a, relations={**a.relations, name: current - {row}})
        case DropSymbol():
            if name in d.theory.symbol_names():
                raise OperationError(f"{name} is used by the theory and cannot be dropped")
            new = _drop(a, op.symbol)
        case _:
            raise OperationError(f"not a deletion payload: {op.payload!r}")

    broken = tuple(f for f in d.theory if not evaluate(new, f))
    if broken:
        if mode is OpMode.strict:
            raise ProvisoViolation(broken[0])
        if warn:
            logger.warning("deletion %s breaks %d theory sentence(s)", op, len(broken))
    return Database(new, d.theory, broken)


def _drop(a: Structure, symbol: Symbol) -> Structure:
    if symbol.is_constant:
        candidates = {a.constants[symbol.name]}
    else:
        candidates = {e for t in a.relations[symbol.name] for e in t}
    removed = {e for e in candidates if free_for(a, e, symbol)}
    domain = tuple(e for e in a.domain if e not in removed)
    if not domain:
        raise OperationError(f"dropping {symbol.name} would empty the domain")
    constants = {k: v for k, v in a.constants.items() if k != symbol.name}
    relations = {k: v for k, v in a.relations.items() if k != symbol.name}
    return Structure(a.sig.without(symbol.name), domain, constants, relations)


def apply_operation(
    d: Database, op: OperationDescriptor, mode: OpMode = OpMode.paper, *, warn: bool = True
) -> Database:
    """Dispatch on the operation kind. `warn=False` silences the log warnings."""
    if op.kind is OpKind.insert:
        return apply_insertion(d, op, mode, warn=warn)
    return apply_deletion(d, op, mode, warn=warn)


# --- Successor enumeration ---


def fresh_labels(a: Structure, count: int) -> list[str]:
    """The first `count` labels N0, N1, … not already used in a."""
    labels: list[str] = []
    for i in itertools.count():
        if len(labels) == count:
            return labels
        label = f"{FRESH_PREFIX}{i}"
        if not a.has_label(label):
            labels.append(label)
    return labels


def _tuple_refs(
    a: Structure, arity: int, fresh_budget: int
) -> Iterator[tuple[ElementRef, ...]]:
    """Argument tuples over existing elements and up to fresh_budget fresh ones.

    Fresh elements appear in canonical order: the k-th new fresh slot is
    always fresh element k, so renamings of the same tuple are not repeated.
    """
    labels = fresh_labels(a, min(fresh_budget, arity))
    existing = [ElementRef(e.label) for e in a.domain]

    def extend(prefix: tuple[ElementRef, ...], used: int) -> Iterator[tuple[ElementRef, ...]]:
        if len(prefix) == arity:
            yield prefix
            return
        for ref in existing:
            yield from extend((*prefix, ref), used)
        for k in range(min(used + 1, len(labels))):
            yield from extend((*prefix, ElementRef(labels[k], fresh=True)), max(used, k + 1))

    yield from extend((), 0)


def _candidates(
    a: Structure, symbol: Symbol, fresh_budget: int
) -> Iterator[OperationDescriptor]:
    declared = a.sig.get(symbol.name)
    position = {e: i for i, e in enumerate(a.domain)}

    # insertions
    if symbol.is_constant:
        if declared is None:
            for e in a.domain:
                yield OperationDescriptor(
                    OpKind.insert, symbol, BindConstant(ElementRef(e.label))
                )
            if fresh_budget > 0:
                (label,) = fresh_labels(a, 1)
                yield OperationDescriptor(
                    OpKind.insert, symbol, BindConstant(ElementRef(label, fresh=True))
                )
    else:
        current = a.relations.get(symbol.name, frozenset())
        for refs in _tuple_refs(a, symbol.arity, fresh_budget):
            if all(not r.fresh for r in refs):
                if tuple(a.element(r.label) for r in refs) in current:
                    continue
            yield OperationDescriptor(OpKind.insert, symbol, InsertTuple(refs))

    if declared is None:
        return

    # deletions
    if symbol.is_constant:
        for e in a.domain:
            if e != a.constants[symbol.name]:
                yield OperationDescriptor(OpKind.delete, symbol, ReinterpretConstant(e.label))
    else:
        rows = sorted(a.relations[symbol.name], key=lambda t: [position[e] for e in t])
        for row in rows:
            yield OperationDescriptor(
                OpKind.delete, symbol, RemoveTuple(tuple(e.label for e in row))
            )
    yield OperationDescriptor(OpKind.delete, symbol, DropSymbol())


def enumerate_successors(
    d: Database,
    mode: OpMode = OpMode.paper,
    fresh_budget: int = 0,
    symbol_pool: Iterable[Symbol] = (),
) -> list[tuple[OperationDescriptor, Database]]:
    """Every legal non-identity single operation on d, deterministically ordered.

    Candidates are ordered by symbol name, insertions before deletions, then
    by element order. Results with an already produced canonical encoding are
    skipped. Pool symbols whose name is already in the signature are ignored.
    """
    a = d.structure
    symbols = {s.name: s for s in symbol_pool if s.name not in a.sig}
    symbols.update({s.name: s for s in a.sig})

    successors: list[tuple[OperationDescriptor, Database]] = []
    seen: set[bytes] = set()
    for name in sorted(symbols):
        for op in _candidates(a, symbols[name], fresh_budget):
            try:
                result = apply_operation(d, op, mode, warn=False)
            except OperationError:
                continue
            encoding = canonical_encoding(result.structure)
            if encoding in seen:
                continue
            seen.add(encoding)
            successors.append((op, result))
    logger.debug("%d successor(s) from a %d-element structure", len(successors), len(a.domain))
    return successors
