"""Exception hierarchy shared by every package."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from logic.syntax import Formula


class InformativityError(ValueError):
    """Base class for all engine errors."""


class FormulaSyntaxError(InformativityError):
    """Text does not match the grammar."""

    def __init__(self, message: str, line: int = -1, column: int = -1) -> None:
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line >= 0 else ""
        super().__init__(f"syntax error{where}: {message}")


class ArityError(InformativityError):
    """A symbol is used with the wrong arity or kind."""

    def __init__(self, symbol: str, message: str) -> None:
        self.symbol = symbol
        super().__init__(f"symbol '{symbol}': {message}")


class NotASentenceError(InformativityError):
    """A sentence was required but the formula has free variables."""

    def __init__(self, free: frozenset[str]) -> None:
        self.free = free
        super().__init__(f"not a sentence, free variables: {', '.join(sorted(free))}")


class StructureError(InformativityError):
    """A structure violates its own well-formedness invariants."""


class CorrectnessError(InformativityError):
    """A theory sentence is false in the structure it should describe."""

    def __init__(self, sentence: Formula, message: str | None = None) -> None:
        from logic.printer import print_formula

        self.sentence = sentence
        super().__init__(message or f"theory sentence is false: {print_formula(sentence)}")


class OperationError(InformativityError):
    """A descriptor does not define a legal insertion or deletion."""


class ProvisoViolation(OperationError):
    """The operation would falsify a theory sentence where the proviso applies."""

    def __init__(self, sentence: Formula) -> None:
        from logic.printer import print_formula

        self.sentence = sentence
        super().__init__(f"proviso violated, theory sentence falsified: {print_formula(sentence)}")


class IllegalStepError(InformativityError):
    """Step `index` of an update is not the claimed operation."""

    def __init__(self, index: int, reason: str) -> None:
        self.index = index
        self.reason = reason
        super().__init__(f"illegal step {index}: {reason}")


class NotSatisfactoryError(InformativityError):
    """The norm is only defined for satisfactory updates."""
