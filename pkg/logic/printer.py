"""Formula printing with minimal parentheses.

Precedence, loosest to tightest: `<->` (left-assoc), `->` (right-assoc),
`|`, `&` (both left-assoc), then `~` and quantifiers, then atoms.
"""

from __future__ import annotations

from .syntax import And, Const, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Rel, Term, Var

_IFF, _IMPLIES, _OR, _AND, _UNARY, _ATOM = range(1, 7)


def print_term(t: Term) -> str:
    match t:
        case Var(name=name) | Const(name=name):
            return name
    raise TypeError(f"not a term: {t!r}")


def print_formula(f: Formula) -> str:
    return _render(f, 0)


def _wrap(text: str, own: int, context: int) -> str:
    return f"({text})" if own < context else text


def _render(f: Formula, context: int) -> str:
    match f:
        case Rel(name=name, args=args):
            return f"{name}({','.join(print_term(t) for t in args)})"
        case Eq(left=left, right=right):
            return f"{print_term(left)} = {print_term(right)}"
        case Not(body=Eq(left=left, right=right)):
            return f"{print_term(left)} != {print_term(right)}"
        case Not(body=body):
            return "~" + _render(body, _UNARY)
        case Forall(var=var, body=body):
            return _wrap(f"forall {var} {_quantified_body(body)}", _UNARY, context)
        case Exists(var=var, body=body):
            return _wrap(f"exists {var} {_quantified_body(body)}", _UNARY, context)
        case Iff(left=left, right=right):
            text = f"{_render(left, _IFF)} <-> {_render(right, _IMPLIES)}"
            return _wrap(text, _IFF, context)
        case Implies(left=left, right=right):
            text = f"{_render(left, _OR)} -> {_render(right, _IMPLIES)}"
            return _wrap(text, _IMPLIES, context)
        case Or(left=left, right=right):
            text = f"{_render(left, _OR)} | {_render(right, _AND)}"
            return _wrap(text, _OR, context)
        case And(left=left, right=right):
            text = f"{_render(left, _AND)} & {_render(right, _UNARY)}"
            return _wrap(text, _AND, context)
    raise TypeError(f"not a formula: {f!r}")


def _quantified_body(body: Formula) -> str:
    # Equalities read badly without parentheses right after the bound variable.
    if isinstance(body, Eq) or (isinstance(body, Not) and isinstance(body.body, Eq)):
        return f"({_render(body, 0)})"
    return _render(body, _UNARY)
