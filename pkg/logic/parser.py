"""Parsing of the ASCII formula language.

Parsing runs in two passes. The lark LALR grammar builds a raw tree in which
every identifier in term position is a `Const`; `resolve` then binds
quantified names to `Var`, resolves the rest against a signature and infers
the arity of symbols the signature does not declare.
"""

from __future__ import annotations

from dataclasses import dataclass

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from shared.errors import ArityError, FormulaSyntaxError, InformativityError

from .syntax import (
    And,
    Const,
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
    is_variable_name,
    require_sentence,
)

# Shared with the file-format grammars in cli.formats.
FORMULA_RULES = r"""
?formula: iff
?iff: implies
    | iff "<->" implies                     -> iff_
?implies: disj
    | disj "->" implies                     -> implies_
?disj: conj
    | disj "|" conj                         -> or_
?conj: unary
    | conj "&" unary                        -> and_
?unary: "~" unary                           -> not_
    | "forall" IDENT unary                  -> forall_
    | "exists" IDENT unary                  -> exists_
    | IDENT "(" term ("," term)* ")"        -> relation
    | term "=" term                         -> equals
    | term "!=" term                        -> not_equals
    | "(" formula ")"
term: IDENT

IDENT: /[A-Za-z_][A-Za-z0-9_]*/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_FORMULA_GRAMMAR = "?start: formula\n" + FORMULA_RULES


class FormulaBuilder(Transformer[Token, Formula]):
    """Turns a lark parse tree into raw formula nodes."""

    @v_args(inline=True)
    def term(self, name: Token) -> Const:
        return Const(str(name))

    @v_args(inline=True)
    def iff_(self, left: Formula, right: Formula) -> Formula:
        return Iff(left, right)

    @v_args(inline=True)
    def implies_(self, left: Formula, right: Formula) -> Formula:
        return Implies(left, right)

    @v_args(inline=True)
    def or_(self, left: Formula, right: Formula) -> Formula:
        return Or(left, right)

    @v_args(inline=True)
    def and_(self, left: Formula, right: Formula) -> Formula:
        return And(left, right)

    @v_args(inline=True)
    def not_(self, body: Formula) -> Formula:
        return Not(body)

    @v_args(inline=True)
    def forall_(self, var: Token, body: Formula) -> Formula:
        return Forall(str(var), body)

    @v_args(inline=True)
    def exists_(self, var: Token, body: Formula) -> Formula:
        return Exists(str(var), body)

    def relation(self, children: list[Token | Const]) -> Formula:
        name, *args = children
        return Rel(str(name), tuple(a for a in args if isinstance(a, Const)))

    @v_args(inline=True)
    def equals(self, left: Term, right: Term) -> Formula:
        return Eq(left, right)

    @v_args(inline=True)
    def not_equals(self, left: Term, right: Term) -> Formula:
        return Not(Eq(left, right))


_parser = Lark(_FORMULA_GRAMMAR, parser="lalr", transformer=FormulaBuilder())


def syntax_error(exc: UnexpectedInput) -> FormulaSyntaxError:
    """Translate a lark error into a FormulaSyntaxError with a location."""
    line = getattr(exc, "line", -1)
    column = getattr(exc, "column", -1)
    if isinstance(exc, UnexpectedEOF):
        message = "unexpected end of input"
    elif isinstance(exc, UnexpectedCharacters):
        message = f"unexpected character {exc.char!r}"
    else:
        token = getattr(exc, "token", None)
        message = f"unexpected token {str(token)!r}" if token is not None else "unexpected input"
    return FormulaSyntaxError(message, line if isinstance(line, int) else -1, column)


@dataclass(frozen=True)
class ParsedFormula:
    """A resolved formula plus the symbols it uses that the signature lacks."""

    formula: Formula
    unknown: frozenset[Symbol]


class _Resolver:
    def __init__(self, sig: Signature) -> None:
        self.sig = sig
        self.unknown: dict[str, Symbol] = {}

    def _note_unknown(self, symbol: Symbol) -> None:
        seen = self.unknown.get(symbol.name)
        if seen is None:
            self.unknown[symbol.name] = symbol
        elif seen != symbol:
            raise ArityError(
                symbol.name, f"used both as {seen} and as {symbol} (inconsistent inferred arity)"
            )

    def term(self, t: Term, bound: frozenset[str]) -> Term:
        name = t.name
        if name in bound:
            return Var(name)
        declared = self.sig.get(name)
        if declared is not None:
            if not declared.is_constant:
                raise ArityError(name, f"relation {declared} used as a term")
            return Const(name)
        if is_variable_name(name):
            return Var(name)
        self._note_unknown(Symbol.constant(name))
        return Const(name)

    def formula(self, f: Formula, bound: frozenset[str]) -> Formula:
        match f:
            case Rel(name=name, args=args):
                declared = self.sig.get(name)
                if declared is not None:
                    if declared.is_constant:
                        raise ArityError(name, "constant applied to arguments")
                    if declared.arity != len(args):
                        raise ArityError(
                            name, f"declared arity {declared.arity}, applied to {len(args)}"
                        )
                else:
                    self._note_unknown(Symbol.relation(name, len(args)))
                return Rel(name, tuple(self.term(t, bound) for t in args))
            case Eq(left=left, right=right):
                return Eq(self.term(left, bound), self.term(right, bound))
            case Not(body=body):
                return Not(self.formula(body, bound))
            case Forall(var=var, body=body):
                return Forall(var, self.formula(body, bound | {var}))
            case Exists(var=var, body=body):
                return Exists(var, self.formula(body, bound | {var}))
            case And(left=left, right=right):
                return And(self.formula(left, bound), self.formula(right, bound))
            case Or(left=left, right=right):
                return Or(self.formula(left, bound), self.formula(right, bound))
            case Implies(left=left, right=right):
                return Implies(self.formula(left, bound), self.formula(right, bound))
            case Iff(left=left, right=right):
                return Iff(self.formula(left, bound), self.formula(right, bound))
        raise TypeError(f"not a formula: {f!r}")


def resolve(raw: Formula, sig: Signature) -> ParsedFormula:
    """Resolve a raw tree against sig.

    Raises:
        ArityError: on arity or kind mismatches.
    """
    resolver = _Resolver(sig)
    formula = resolver.formula(raw, frozenset())
    return ParsedFormula(formula, frozenset(resolver.unknown.values()))


def parse_raw(text: str) -> Formula:
    try:
        return _parser.parse(text)
    except UnexpectedInput as exc:
        raise syntax_error(exc) from exc
    except VisitError as exc:
        if isinstance(exc.orig_exc, InformativityError):
            raise exc.orig_exc from exc
        raise


def parse_formula(text: str, sig: Signature | None = None) -> ParsedFormula:
    """Parse text and resolve it against sig (empty signature by default).

    Symbols outside sig parse successfully and are listed in `unknown`:
    identifiers applied to arguments become relations of the observed arity,
    bare identifiers become constants.

    Raises:
        FormulaSyntaxError: if text does not match the grammar.
        ArityError: on arity mismatches or inconsistent inferred arities.
    """
    return resolve(parse_raw(text), sig or Signature())


def parse_sentence(text: str, sig: Signature | None = None) -> Formula:
    """Parse a formula and require it to have no free variables."""
    return require_sentence(parse_formula(text, sig).formula)
