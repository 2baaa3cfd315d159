"""First-order syntax, parsing, printing and finite-structure semantics.

Quick Start:
    from logic import parse_sentence, evaluate

    f = parse_sentence("forall x (C(x) | E(x))", structure.sig)
    evaluate(structure, f)
"""

from .parser import FORMULA_RULES, ParsedFormula, parse_formula, parse_sentence, resolve
from .printer import print_formula, print_term
from .semantics import (
    Element,
    Structure,
    canonical_encoding,
    changed_symbols,
    evaluate,
    first_falsified,
    interprets,
    models_theory,
)
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
    conjoin,
    dedupe,
    free_variables,
    is_sentence,
    is_variable_name,
    require_sentence,
    signature_of,
    symbol_names,
    symbols_of,
)

__all__ = [
    # Syntax
    "Symbol",
    "Signature",
    "Var",
    "Const",
    "Term",
    "Rel",
    "Eq",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Forall",
    "Exists",
    "Formula",
    "free_variables",
    "is_sentence",
    "is_variable_name",
    "require_sentence",
    "symbols_of",
    "symbol_names",
    "signature_of",
    "conjoin",
    "dedupe",
    # Parsing and printing
    "FORMULA_RULES",
    "ParsedFormula",
    "parse_formula",
    "parse_sentence",
    "resolve",
    "print_formula",
    "print_term",
    # Semantics
    "Element",
    "Structure",
    "evaluate",
    "models_theory",
    "first_falsified",
    "interprets",
    "canonical_encoding",
    "changed_symbols",
]
