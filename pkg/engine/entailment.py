"""Bounded classical consequence checks by finite countermodel search.

Non-entailment is certified by a concrete countermodel. Entailment is only
established relative to the domain-size bound, and a search that hits the
node cap yields an unknown verdict.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from logic import Formula, Structure, evaluate, interprets, require_sentence, signature_of
from shared.config import EngineSettings
from shared.types import VerdictKind

from ._internal import find_countermodel
from .deduction import Deduction

logger = logging.getLogger(__name__)


class BoundConfig(BaseModel):
    """Limits for countermodel search.

    `seed_structures` are checked, in order, before any enumeration.
    """

    model_config = ConfigDict(frozen=True)

    max_domain: int = Field(default=4, ge=1)
    max_nodes: int = Field(default=2_000_000, ge=1)
    seed_structures: tuple[Any, ...] = ()

    @field_validator("seed_structures")
    @classmethod
    def _structures_only(cls, value: tuple[Any, ...]) -> tuple[Any, ...]:
        for item in value:
            if not isinstance(item, Structure):
                raise ValueError(f"seed must be a Structure, got {type(item).__name__}")
        return value

    @classmethod
    def from_settings(cls, settings: EngineSettings) -> BoundConfig:
        return cls(max_domain=settings.bound, max_nodes=settings.max_nodes)

    def with_seeds(self, seeds: Iterable[Structure]) -> BoundConfig:
        return self.model_copy(update={"seed_structures": (*self.seed_structures, *seeds)})


@dataclass(frozen=True, slots=True)
class Verdict:
    """holds-up-to-bound, fails with a witness, or unknown with a reason."""

    kind: VerdictKind
    bound: int | None = None
    witness: Structure | None = None
    reason: str | None = None

    @classmethod
    def holds(cls, bound: int) -> Verdict:
        return cls(VerdictKind.holds, bound=bound)

    @classmethod
    def fails(cls, witness: Structure) -> Verdict:
        return cls(VerdictKind.fails, witness=witness)

    @classmethod
    def unknown(cls, reason: str) -> Verdict:
        return cls(VerdictKind.unknown, reason=reason)

    @property
    def is_holds(self) -> bool:
        return self.kind is VerdictKind.holds

    @property
    def is_fails(self) -> bool:
        return self.kind is VerdictKind.fails

    @property
    def is_unknown(self) -> bool:
        return self.kind is VerdictKind.unknown

    def __str__(self) -> str:
        if self.is_holds:
            return f"{self.kind.value} (bound {self.bound})"
        if self.is_unknown:
            return f"{self.kind.value}: {self.reason}"
        return self.kind.value


def entails(t: Iterable[Formula], f: Formula, cfg: BoundConfig | None = None) -> Verdict:
    """Does every model of t (up to the bound) satisfy f?

    Seeds that interpret every symbol involved are tried first. Then
    structures over the joint signature of t and f are enumerated by
    domain size 1..max_domain.

    Raises:
        NotASentenceError: if f or a member of t has free variables.
        ArityError: if t and f use one name with different arities.
    """
    cfg = cfg or BoundConfig()
    theory = tuple(require_sentence(s) for s in t)
    require_sentence(f)

    for seed in cfg.seed_structures:
        if not all(interprets(seed, s) for s in (*theory, f)):
            continue
        if all(evaluate(seed, s) for s in theory) and not evaluate(seed, f):
            logger.debug("seed structure is a countermodel")
            return Verdict.fails(seed)

    sig = signature_of((*theory, f))
    result = find_countermodel(sig, theory, f, cfg.max_domain, cfg.max_nodes)
    if result.witness is not None:
        return Verdict.fails(result.witness)
    if result.capped:
        logger.warning("countermodel search stopped after %d nodes", result.nodes)
        return Verdict.unknown(f"node cap {cfg.max_nodes} reached")
    return Verdict.holds(cfg.max_domain)


def is_tautology(f: Formula, cfg: BoundConfig | None = None) -> Verdict:
    return entails((), f, cfg)


def is_valid_deduction(ded: Deduction, cfg: BoundConfig | None = None) -> Verdict:
    """Search for a model of the premises falsifying the conclusion."""
    return entails(ded.premises, ded.conclusion, cfg)
