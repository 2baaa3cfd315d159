"""Informational complexity, relevancy and semantic informativity.

Every value is an exact `Fraction`. Results carry caveat flags saying which
conventions or bounded checks they depend on.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from logic import Formula, dedupe, interprets, require_sentence
from shared.types import Caveat

from .deduction import Deduction
from .entailment import BoundConfig, entails, is_valid_deduction
from .updates import Update, UpdateCollection, is_satisfactory, norm

logger = logging.getLogger(__name__)


def format_rational(value: Fraction) -> str:
    """Integer or p/q, never a decimal."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class MetricValue:
    """An exact metric value with its provenance.

    Attributes:
        value: The exact rational value.
        caveats: Conventions or bounded checks the value relies on.
        chosen_update: Index in the collection of the update that realises
            the value, when there is one.
        relevant: Relevant support members, for relevancy and informativity.
        bound: Countermodel domain bound used, when entailment was consulted.
    """

    value: Fraction
    caveats: frozenset[Caveat] = field(default_factory=frozenset)
    chosen_update: int | None = None
    relevant: tuple[Formula, ...] | None = None
    bound: int | None = None

    def __str__(self) -> str:
        return format_rational(self.value)

    @property
    def is_conclusive(self) -> bool:
        return not self.caveats & {Caveat.validity_assumed, Caveat.unknown_verdict}


def _signature_caveats(coll: UpdateCollection, formulas: Iterable[Formula]) -> set[Caveat]:
    if not coll:
        return set()
    base = coll[0].base.structure
    if all(interprets(base, f) for f in formulas):
        return set()
    return {Caveat.out_of_signature}


def _theory_break_caveats(u: Update) -> set[Caveat]:
    return {Caveat.theory_break} if any(d.theory_breaks for d in u) else set()


# --- Complexity ---


def complexity(coll: UpdateCollection, f: Formula) -> MetricValue:
    """Least norm for f over the satisfactory updates of coll, 0 when there is none."""
    require_sentence(f)
    best: tuple[int, int] | None = None
    for i, u in enumerate(coll):
        if is_satisfactory(u, f):
            candidate = (norm(u, f), i)
            if best is None or candidate < best:
                best = candidate
    caveats = _signature_caveats(coll, [f])
    if best is None:
        return MetricValue(Fraction(0), frozenset(caveats))
    value, index = best
    caveats |= _theory_break_caveats(coll[index])
    return MetricValue(Fraction(value), frozenset(caveats), chosen_update=index)


def complexity_of_set(coll: UpdateCollection, fs: Iterable[Formula]) -> MetricValue:
    """Sum of complexities over the distinct members of fs."""
    total = Fraction(0)
    caveats: set[Caveat] = set()
    for f in dedupe(fs):
        part = complexity(coll, f)
        total += part.value
        caveats |= part.caveats
    return MetricValue(total, frozenset(caveats))


# --- Relevancy ---


@dataclass(frozen=True)
class _Relevance:
    members: tuple[Formula, ...]
    caveats: frozenset[Caveat]


def _relevance(u: Update, fs: Iterable[Formula], cfg: BoundConfig) -> _Relevance:
    seeded = cfg.with_seeds(u.structures)
    relevant: list[Formula] = []
    caveats: set[Caveat] = set()
    for f in dedupe(fs):
        if not is_satisfactory(u, f):
            continue
        verdict = entails(u.base.theory, f, seeded)
        if verdict.is_fails:
            relevant.append(f)
        elif verdict.is_holds:
            caveats.add(Caveat.bounded_entailment)
        else:
            caveats.add(Caveat.unknown_verdict)
    return _Relevance(tuple(relevant), frozenset(caveats))


def relevant_propositions(
    u: Update, fs: Iterable[Formula], cfg: BoundConfig | None = None
) -> tuple[Formula, ...]:
    """Members of fs satisfied by u that the theory provably does not entail.

    Non-entailment needs a concrete countermodel; the structures of u are
    tried as countermodels before enumeration.
    """
    return _relevance(u, fs, cfg or BoundConfig()).members


def _smallest_satisfactory(coll: UpdateCollection, f: Formula) -> int | None:
    """Index of the update with least norm for f, then fewest databases, then first."""
    ranked = [(norm(u, f), len(u), i) for i, u in enumerate(coll) if is_satisfactory(u, f)]
    return min(ranked)[2] if ranked else None


def relevancy(
    coll: UpdateCollection, ded: Deduction, cfg: BoundConfig | None = None
) -> MetricValue:
    """Share of the support that is relevant on the smallest update satisfying
    the conclusion. Invalid deductions, and deductions whose conclusion no
    update satisfies, get 0.
    """
    cfg = cfg or BoundConfig()
    caveats: set[Caveat] = set()
    support = ded.support

    validity = is_valid_deduction(ded, cfg)
    if validity.is_fails:
        return MetricValue(Fraction(0), bound=cfg.max_domain)
    if validity.is_unknown:
        logger.warning("deduction validity unknown, assuming valid")
        caveats.add(Caveat.validity_assumed)
    else:
        caveats.add(Caveat.bounded_entailment)

    index = _smallest_satisfactory(coll, ded.conclusion)
    caveats |= _signature_caveats(coll, support.members)
    if index is None:
        return MetricValue(Fraction(0), frozenset(caveats), bound=cfg.max_domain)

    chosen = coll[index]
    relevance = _relevance(chosen, support.members, cfg)
    caveats |= relevance.caveats | _theory_break_caveats(chosen)
    return MetricValue(
        Fraction(len(relevance.members), len(support)),
        frozenset(caveats),
        chosen_update=index,
        relevant=relevance.members,
        bound=cfg.max_domain,
    )


# --- Informativity ---


def informativity(
    coll: UpdateCollection, ded: Deduction, cfg: BoundConfig | None = None
) -> MetricValue:
    """Complexity of the support times relevancy."""
    c = complexity_of_set(coll, ded.support.members)
    r = relevancy(coll, ded, cfg)
    return MetricValue(
        c.value * r.value,
        c.caveats | r.caveats,
        chosen_update=r.chosen_update,
        relevant=r.relevant,
        bound=r.bound,
    )


def informativity_of_proposition(
    coll: UpdateCollection, f: Formula, cfg: BoundConfig | None = None
) -> MetricValue:
    """Informativity of the one-proposition deduction f ⊢ f."""
    return informativity(coll, Deduction.single(f), cfg)
