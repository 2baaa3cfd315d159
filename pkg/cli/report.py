"""Paper-example report: recompute every corpus case and ledger the disagreements.

The JSON form is stable: cases in corpus order, discrepancies by id, sorted
caveats, rationals as integers or `p/q`.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field

from engine import BoundConfig
from shared.errors import InformativityError
from shared.types import OpMode

from .corpus import CorpusCase, Outcome, PaperFixtures, load_paper_fixtures, paper_corpus

logger = logging.getLogger(__name__)

DISCREPANCY_NOTES = {
    "PD-1": "A'3 as printed interprets s and a by the same element, so s = a holds there.",
    "PD-2": "T does not entail exists x E(x): the one-element all-C structure is a countermodel.",
    "PD-3": "An extended-signature tautology is never relevant, so I = 0 while C = 1.",
    "PD-4": "The support of E(a) |- exists x E(x) has complexity 0 + 0.",
    "PD-5": "~H(s,a) already holds at index 1, where s and a name the same element.",
}


# =============================================================================
# Report Schemas
# =============================================================================


class CaseResult(BaseModel):
    """One recomputed corpus case."""

    model_config = ConfigDict(frozen=True)

    id: str
    inputs: list[str]
    computed: str
    paper: str | None = None
    derived: str
    paper_match: bool | None = None
    derived_match: bool
    discrepancy: str | None = None
    mode: OpMode
    bound: int
    caveats: list[str] = Field(default_factory=list)


class DiscrepancyEntry(BaseModel):
    """A disagreement between a printed value and the definitions."""

    model_config = ConfigDict(frozen=True)

    id: str
    cases: list[str]
    paper: list[str]
    derived: list[str]
    note: str
    artifact: str | None = None


class ReportSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    cases: int
    derived_matches: int
    paper_matches: int
    paper_mismatches: int
    discrepancies: int


class Report(BaseModel):
    """The full paper report."""

    model_config = ConfigDict(frozen=True)

    mode: OpMode
    bound: int
    cases: list[CaseResult]
    discrepancies: list[DiscrepancyEntry]
    summary: ReportSummary

    @property
    def ok(self) -> bool:
        """True iff every case reproduced its derived value."""
        return all(case.derived_match for case in self.cases)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"

    def render(self) -> str:
        lines = [f"mode: {self.mode.value}  bound: {self.bound}", ""]
        for case in self.cases:
            status = "ok" if case.derived_match else "MISMATCH"
            line = f"{status:8} {case.id}: {case.computed}"
            if case.paper is not None and not case.paper_match:
                line += f"  (paper: {case.paper})"
            if case.discrepancy:
                line += f"  [{case.discrepancy}]"
            if case.caveats:
                line += f"  caveats: {', '.join(case.caveats)}"
            lines.append(line)
        lines += ["", "Discrepancies:"]
        for entry in self.discrepancies:
            lines.append(f"  {entry.id} ({', '.join(entry.cases)})")
            lines.append(f"    paper:   {'; '.join(entry.paper)}")
            lines.append(f"    derived: {'; '.join(entry.derived)}")
            lines.append(f"    {entry.note}")
            if entry.artifact:
                lines.append("    countermodel:")
                lines += [f"      {row}" for row in entry.artifact.splitlines()]
        s = self.summary
        lines += [
            "",
            f"{s.derived_matches}/{s.cases} derived values reproduced, "
            f"{s.paper_matches} agree with the printed value, "
            f"{s.discrepancies} discrepancies",
        ]
        return "\n".join(lines) + "\n"


# =============================================================================
# Report Construction
# =============================================================================


def _run_case(
    case: CorpusCase, fixtures: PaperFixtures, cfg: BoundConfig
) -> tuple[CaseResult, Outcome]:
    try:
        outcome = case.compute(fixtures, cfg)
    except InformativityError as exc:
        outcome = Outcome(f"error: {exc}")
    result = CaseResult(
        id=case.id,
        inputs=list(case.inputs),
        computed=outcome.value,
        paper=case.expected_paper,
        derived=case.expected_derived,
        paper_match=None if case.expected_paper is None else outcome.value == case.expected_paper,
        derived_match=outcome.value == case.expected_derived,
        discrepancy=case.discrepancy,
        mode=fixtures.mode,
        bound=cfg.max_domain,
        caveats=sorted(c.value for c in outcome.caveats),
    )
    if not result.derived_match:
        logger.warning(
            "case %s: computed %s, expected %s", case.id, outcome.value, case.expected_derived
        )
    return result, outcome


def _ledger(results: Iterable[tuple[CaseResult, Outcome]]) -> list[DiscrepancyEntry]:
    grouped: dict[str, list[tuple[CaseResult, Outcome]]] = {}
    for result, outcome in results:
        if result.discrepancy:
            grouped.setdefault(result.discrepancy, []).append((result, outcome))
    entries = []
    for pd_id in sorted(grouped):
        members = grouped[pd_id]
        artifacts = [o.artifact for _, o in members if o.artifact]
        entries.append(
            DiscrepancyEntry(
                id=pd_id,
                cases=[r.id for r, _ in members],
                paper=[f"{r.id}: {r.paper}" for r, _ in members if r.paper is not None],
                derived=[f"{r.id}: {r.computed}" for r, _ in members],
                note=DISCREPANCY_NOTES.get(pd_id, ""),
                artifact=artifacts[0] if artifacts else None,
            )
        )
    return entries


def run_paper_report(mode: OpMode = OpMode.paper, cfg: BoundConfig | None = None) -> Report:
    """Recompute every bundled case under mode and cfg."""
    cfg = cfg or BoundConfig()
    fixtures = load_paper_fixtures(mode)
    results = [_run_case(case, fixtures, cfg) for case in paper_corpus()]
    cases = [r for r, _ in results]
    discrepancies = _ledger(results)
    summary = ReportSummary(
        cases=len(cases),
        derived_matches=sum(c.derived_match for c in cases),
        paper_matches=sum(c.paper_match is True for c in cases),
        paper_mismatches=sum(c.paper_match is False for c in cases),
        discrepancies=len(discrepancies),
    )
    logger.info(
        "paper report: %d/%d derived values reproduced", summary.derived_matches, summary.cases
    )
    return Report(
        mode=mode, bound=cfg.max_domain, cases=cases, discrepancies=discrepancies, summary=summary
    )
