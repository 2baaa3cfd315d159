"""Deductions, their support, and the associated conditional."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from logic import Formula, Implies, conjoin, dedupe, require_sentence


@dataclass(frozen=True, slots=True)
class Support:
    """Premises plus conclusion, without intermediate steps, duplicates removed."""

    members: tuple[Formula, ...]
    conclusion: Formula

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members


@dataclass(frozen=True, slots=True)
class Deduction:
    """Premises φ₀…φₖ, intermediate steps, and the conclusion φₙ."""

    premises: tuple[Formula, ...]
    conclusion: Formula
    steps: tuple[Formula, ...] = ()

    def __post_init__(self) -> None:
        for f in (*self.premises, *self.steps, self.conclusion):
            require_sentence(f)

    @classmethod
    def of(
        cls, premises: Iterable[Formula], conclusion: Formula, steps: Iterable[Formula] = ()
    ) -> Deduction:
        return cls(tuple(premises), conclusion, tuple(steps))

    @classmethod
    def single(cls, f: Formula) -> Deduction:
        """The one-proposition deduction f ⊢ f."""
        return cls((f,), f)

    @property
    def support(self) -> Support:
        return Support(dedupe((*self.premises, self.conclusion)), self.conclusion)


def associated_conditional(ded: Deduction) -> Formula:
    """(φ₀ ∧ … ∧ φₖ) → φₙ, or the conclusion alone when there are no premises."""
    antecedent = conjoin(ded.premises)
    if antecedent is None:
        return ded.conclusion
    return Implies(antecedent, ded.conclusion)
