"""Shared enumerations for the logic, engine and cli packages."""

from enum import Enum


class SymbolKind(str, Enum):
    """Kind of a signature symbol."""

    constant = "constant"
    relation = "relation"


class OpKind(str, Enum):
    """Structural operation kind."""

    insert = "insert"
    delete = "delete"


class OpMode(str, Enum):
    """Where the theory-preservation proviso is enforced.

    `paper` enforces it for insertions only, which is what every worked
    example needs; `strict` enforces it for deletions too.
    """

    paper = "paper"
    strict = "strict"


class VerdictKind(str, Enum):
    """Outcome of a bounded consequence check."""

    holds = "holds-up-to-bound"
    fails = "fails"
    unknown = "unknown"


class Caveat(str, Enum):
    """Flags attached to computed values."""

    validity_assumed = "validity-assumed"
    bounded_entailment = "bounded-entailment"
    unknown_verdict = "unknown-verdict"
    out_of_signature = "out-of-signature"
    theory_break = "theory-break"
