"""Readers and writers for `.fodb` databases, `.ops` scripts and `.ded` deductions.

All three grammars are lark LALR grammars sharing the formula rules of
`logic.parser`. `#` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from lark import Lark, Token, v_args
from lark.exceptions import UnexpectedInput, VisitError

from engine import (
    BindConstant,
    Database,
    Deduction,
    DropSymbol,
    ElementRef,
    InsertTuple,
    OperationDescriptor,
    ReinterpretConstant,
    RemoveTuple,
    Theory,
    Update,
    apply_operation,
    make_database,
    validate_update,
)
from logic import (
    FORMULA_RULES,
    Element,
    Formula,
    Signature,
    Structure,
    Symbol,
    print_formula,
    resolve,
)
from logic.parser import FormulaBuilder, syntax_error
from shared.errors import (
    ArityError,
    IllegalStepError,
    InformativityError,
    OperationError,
    StructureError,
)
from shared.types import OpKind, OpMode

logger = logging.getLogger(__name__)

_DATABASE_GRAMMAR = r"""
start: section*
?section: signature | domain | interpret | theory

signature: "signature" "{" sig_item* "}"
?sig_item: "const" IDENT ("," IDENT)*       -> const_decl
    | "rel" rel_decl ("," rel_decl)*          -> rel_decls
rel_decl: IDENT "/" INT

domain: "domain" "{" (IDENT ("," IDENT)*)? "}"

interpret: "interpret" "{" binding* "}"
?binding: IDENT "=" IDENT                     -> const_binding
    | IDENT "=" "{" (row ("," row)*)? "}"     -> rel_binding
row: IDENT
    | "(" IDENT ("," IDENT)* ")"

theory: "theory" "{" formula* "}"

%import common.INT
""" + FORMULA_RULES

_OPS_GRAMMAR = r"""
start: op*
?op: "insert" "const" IDENT "=" ref                        -> insert_const
    | "insert" "rel" IDENT "(" ref ("," ref)* ")"           -> insert_rel
    | "delete" "const" IDENT "reinterpret" IDENT            -> reinterpret
    | "delete" "const" IDENT "drop"                         -> drop_const
    | "delete" "rel" IDENT "tuple" "(" IDENT ("," IDENT)* ")" -> remove
    | "delete" "rel" IDENT "drop"                           -> drop_rel
?ref: IDENT                                                 -> existing
    | "new" IDENT                                           -> fresh
""" + FORMULA_RULES

_DEDUCTION_GRAMMAR = r"""
start: premises? steps? conclusion
premises: "premises" "{" formula* "}"
steps: "steps" "{" formula* "}"
conclusion: "conclusion" "{" formula "}"
""" + FORMULA_RULES


# --- Parse-tree builders ---


class _DatabaseBuilder(FormulaBuilder):
    def const_decl(self, names: list[Token]) -> tuple[str, list[Symbol]]:
        return "sig", [Symbol.constant(str(n)) for n in names]

    def rel_decls(self, decls: list[Symbol]) -> tuple[str, list[Symbol]]:
        return "sig", decls

    @v_args(inline=True)
    def rel_decl(self, name: Token, arity: Token) -> Symbol:
        return Symbol.relation(str(name), int(arity))

    def signature(self, items: list[tuple[str, list[Symbol]]]) -> tuple[str, Any]:
        return "signature", [s for _, symbols in items for s in symbols]

    def domain(self, labels: list[Token]) -> tuple[str, Any]:
        return "domain", [str(label) for label in labels]

    @v_args(inline=True)
    def const_binding(self, name: Token, label: Token) -> tuple[str, str, Any]:
        return "const", str(name), str(label)

    def rel_binding(self, children: list[Any]) -> tuple[str, str, Any]:
        name, *rows = children
        return "rel", str(name), rows

    def row(self, labels: list[Token]) -> tuple[str, ...]:
        return tuple(str(label) for label in labels)

    def interpret(self, bindings: list[tuple[str, str, Any]]) -> tuple[str, Any]:
        return "interpret", bindings

    def theory(self, formulas: list[Formula]) -> tuple[str, Any]:
        return "theory", formulas

    def start(self, sections: list[tuple[str, Any]]) -> dict[str, Any]:
        found: dict[str, Any] = {}
        for key, value in sections:
            if key in found:
                raise StructureError(f"section '{key}' appears twice")
            found[key] = value
        return found


@dataclass(frozen=True, slots=True)
class ScriptLine:
    """One `.ops` line before its symbol is resolved against a database."""

    kind: OpKind
    constant: bool
    name: str
    payload: BindConstant | InsertTuple | ReinterpretConstant | RemoveTuple | DropSymbol

    def resolve(self, a: Structure) -> OperationDescriptor:
        """Attach the symbol's arity, taken from the payload or from a."""
        if self.constant:
            symbol = Symbol.constant(self.name)
        elif isinstance(self.payload, InsertTuple | RemoveTuple):
            symbol = Symbol.relation(self.name, len(self.payload.args))
        else:
            declared = a.sig.get(self.name)
            if declared is None or declared.is_constant:
                raise OperationError(f"relation {self.name} is not in the signature")
            symbol = declared
        return OperationDescriptor(self.kind, symbol, self.payload)


class _OpsBuilder(FormulaBuilder):
    @v_args(inline=True)
    def existing(self, label: Token) -> ElementRef:
        return ElementRef(str(label))

    @v_args(inline=True)
    def fresh(self, label: Token) -> ElementRef:
        return ElementRef(str(label), fresh=True)

    @v_args(inline=True)
    def insert_const(self, name: Token, ref: ElementRef) -> ScriptLine:
        return ScriptLine(OpKind.insert, True, str(name), BindConstant(ref))

    def insert_rel(self, children: list[Any]) -> ScriptLine:
        name, *refs = children
        return ScriptLine(OpKind.insert, False, str(name), InsertTuple(tuple(refs)))

    @v_args(inline=True)
    def reinterpret(self, name: Token, label: Token) -> ScriptLine:
        return ScriptLine(OpKind.delete, True, str(name), ReinterpretConstant(str(label)))

    @v_args(inline=True)
    def drop_const(self, name: Token) -> ScriptLine:
        return ScriptLine(OpKind.delete, True, str(name), DropSymbol())

    def remove(self, children: list[Token]) -> ScriptLine:
        name, *labels = children
        return ScriptLine(
            OpKind.delete, False, str(name), RemoveTuple(tuple(str(x) for x in labels))
        )

    @v_args(inline=True)
    def drop_rel(self, name: Token) -> ScriptLine:
        return ScriptLine(OpKind.delete, False, str(name), DropSymbol())

    def start(self, lines: list[ScriptLine]) -> list[ScriptLine]:
        return lines


class _DeductionBuilder(FormulaBuilder):
    def premises(self, formulas: list[Formula]) -> tuple[str, list[Formula]]:
        return "premises", formulas

    def steps(self, formulas: list[Formula]) -> tuple[str, list[Formula]]:
        return "steps", formulas

    def conclusion(self, formulas: list[Formula]) -> tuple[str, list[Formula]]:
        return "conclusion", formulas

    def start(self, blocks: list[tuple[str, list[Formula]]]) -> dict[str, list[Formula]]:
        return dict(blocks)


_database_parser = Lark(_DATABASE_GRAMMAR, parser="lalr", transformer=_DatabaseBuilder())
_ops_parser = Lark(_OPS_GRAMMAR, parser="lalr", transformer=_OpsBuilder())
_deduction_parser = Lark(_DEDUCTION_GRAMMAR, parser="lalr", transformer=_DeductionBuilder())


def _parse(parser: Lark, text: str) -> Any:
    try:
        return parser.parse(text)
    except UnexpectedInput as exc:
        raise syntax_error(exc) from exc
    except VisitError as exc:
        if isinstance(exc.orig_exc, InformativityError):
            raise exc.orig_exc from exc
        raise


def _read(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


# --- Databases ---


def parse_database(text: str) -> Database:
    """Build a database from `.fodb` text.

    Raises:
        FormulaSyntaxError: on grammar errors.
        StructureError: on missing or malformed sections.
        CorrectnessError: if the theory is not true in the structure.
    """
    sections = _parse(_database_parser, text)
    if "domain" not in sections:
        raise StructureError("missing 'domain' section")
    sig = Signature.of(sections.get("signature", []))

    domain = tuple(Element(i, label) for i, label in enumerate(sections["domain"]))
    by_label = {e.label: e for e in domain}

    def element(label: str) -> Element:
        if label not in by_label:
            raise StructureError(f"unknown element {label}")
        return by_label[label]

    constants: dict[str, Element] = {}
    relations: dict[str, frozenset[tuple[Element, ...]]] = {
        s.name: frozenset() for s in sig.relations
    }
    for kind, name, value in sections.get("interpret", []):
        symbol = sig.get(name)
        if symbol is None:
            raise StructureError(f"{name} is interpreted but not declared")
        if kind == "const":
            if not symbol.is_constant:
                raise ArityError(name, "relation bound to a single element")
            constants[name] = element(value)
        else:
            if symbol.is_constant:
                raise ArityError(name, "constant bound to a set of tuples")
            relations[name] = frozenset(tuple(element(x) for x in row) for row in value)

    structure = Structure(sig, domain, constants, relations)
    theory = Theory.of(resolve(f, sig).formula for f in sections.get("theory", []))
    return make_database(structure, theory)


def load_database(path: str | Path) -> Database:
    database = parse_database(_read(path))
    logger.debug("loaded %s: %d element(s)", path, len(database.structure.domain))
    return database


def _row(t: tuple[Element, ...]) -> str:
    if len(t) == 1:
        return t[0].label
    return "(" + ", ".join(e.label for e in t) + ")"


def dump_structure(a: Structure) -> str:
    """Signature, domain and interpret blocks for a."""
    position = {e: i for i, e in enumerate(a.domain)}
    consts = ", ".join(s.name for s in a.sig.constants)
    rels = ", ".join(str(s) for s in a.sig.relations)
    parts = (consts and f"const {consts}", rels and f"rel {rels}")
    decls = " ".join(part for part in parts if part)
    lines = [
        f"signature {{ {decls} }}" if decls else "signature { }",
        f"domain {{ {', '.join(e.label for e in a.domain)} }}",
        "interpret {",
    ]
    for name, e in a.constants.items():
        lines.append(f"  {name} = {e.label}")
    for name, tuples in a.relations.items():
        rows = sorted(tuples, key=lambda t: [position[e] for e in t])
        lines.append(f"  {name} = {{{', '.join(_row(t) for t in rows)}}}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_database(d: Database) -> str:
    lines = [dump_structure(d.structure), "theory {"]
    lines.extend(f"  {print_formula(f)}" for f in d.theory)
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- Operation scripts ---


def parse_ops(text: str) -> list[ScriptLine]:
    return list(_parse(_ops_parser, text))


def ops_from_script(
    text: str, base: Database, mode: OpMode = OpMode.paper
) -> Update:
    """Apply the script's operations from base and validate the resulting update.

    Raises:
        FormulaSyntaxError: on grammar errors.
        IllegalStepError: naming the first operation that cannot be applied.
    """
    dbs = [base]
    ops: list[OperationDescriptor] = []
    for i, line in enumerate(parse_ops(text)):
        try:
            op = line.resolve(dbs[-1].structure)
            dbs.append(apply_operation(dbs[-1], op, mode))
        except (OperationError, ArityError) as exc:
            raise IllegalStepError(i, str(exc)) from exc
        ops.append(op)
    return validate_update(dbs, ops, mode)


def load_ops_script(path: str | Path, base: Database, mode: OpMode = OpMode.paper) -> Update:
    return ops_from_script(_read(path), base, mode)


def dump_ops(ops: Iterable[OperationDescriptor]) -> str:
    return "".join(f"{op}\n" for op in ops)


# --- Deductions ---


def parse_deduction(text: str, sig: Signature | None = None) -> Deduction:
    """Build a deduction, resolving names against sig (empty by default)."""
    blocks = _parse(_deduction_parser, text)
    sig = sig or Signature()

    def formulas(key: str) -> list[Formula]:
        return [resolve(f, sig).formula for f in blocks.get(key, [])]

    (conclusion,) = formulas("conclusion")
    return Deduction.of(formulas("premises"), conclusion, formulas("steps"))


def load_deduction(path: str | Path, sig: Signature | None = None) -> Deduction:
    return parse_deduction(_read(path), sig)


def dump_deduction(ded: Deduction) -> str:
    def block(name: str, formulas: Iterable[Formula]) -> list[str]:
        return [f"{name} {{", *(f"  {print_formula(f)}" for f in formulas), "}"]

    lines = [
        *block("premises", ded.premises),
        *block("steps", ded.steps),
        *block("conclusion", [ded.conclusion]),
    ]
    return "\n".join(lines) + "\n"
