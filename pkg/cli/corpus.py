"""The bundled worked-example corpus.

Each case recomputes one published value from the files under `data/`. A
case records the value printed in the source text, when there is one, next
to the value the definitions yield (`derived`); when they disagree the case
names the discrepancy it belongs to.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from engine import (
    BoundConfig,
    Database,
    Deduction,
    MetricValue,
    Update,
    UpdateCollection,
    apply_operation,
    associated_conditional,
    complexity,
    entails,
    informativity,
    informativity_of_proposition,
    insert_constant,
    insert_tuple,
    is_satisfactory,
    relevancy,
    relevant_propositions,
    remove_tuple,
    validate_update,
)
from engine.operations import ElementRef
from logic import Formula, first_falsified, parse_sentence, print_formula
from shared.errors import IllegalStepError, OperationError
from shared.types import Caveat, OpMode

from .formats import dump_structure, load_database, load_deduction, load_ops_script

DATA_DIR = Path(__file__).parent / "data"


@dataclass(frozen=True)
class PaperFixtures:
    """The example database D₀ and the updates built on it.

    Updates are loaded on first use; under `strict` mode the ones whose
    deletions break the theory raise when accessed.

    Attributes:
        mode: Mode every update is validated under.
        d0: The cities-and-streets database.
        data_dir: Directory holding the bundled files.
    """

    mode: OpMode
    d0: Database
    data_dir: Path = DATA_DIR

    def sentence(self, text: str) -> Formula:
        return parse_sentence(text, self.d0.sig)

    def _update(self, name: str) -> Update:
        return load_ops_script(self.data_dir / name, self.d0, self.mode)

    @cached_property
    def singleton(self) -> Update:
        """(D₀)."""
        return self._update("update_D0.ops")

    @cached_property
    def insert_b(self) -> Update:
        """(D₀, D₁), binding the new constant b to the existing street."""
        return self._update("update_D.ops")

    @cached_property
    def deletions(self) -> Update:
        """(D₀, D′₁, D′₂, D′₃), moving s onto a and cleaning up after it."""
        return self._update("update_Dp.ops")

    @cached_property
    def street_update(self) -> Update:
        """(D₀, D₁, D₂, D₃, D₄), ending with b outside E."""
        return self._update("update_Dpp.ops")

    @cached_property
    def a3_printed(self) -> Database:
        """The last structure of the deletion example as printed, over T."""
        a3 = load_database(self.data_dir / "example_2_6_a3.fodb").structure
        broken = tuple(f for f in self.d0.theory if first_falsified(a3, [f]) is not None)
        return Database(a3, self.d0.theory, broken)

    @cached_property
    def street_deduction(self) -> Deduction:
        return load_deduction(self.data_dir / "deduction_street.ded", self.d0.sig)

    @cached_property
    def exists_deduction(self) -> Deduction:
        return load_deduction(self.data_dir / "deduction_exists.ded", self.d0.sig)

    @property
    def pair(self) -> UpdateCollection:
        """{(D₀), (D₀, D₁)}."""
        return UpdateCollection.of([self.singleton, self.insert_b])

    @property
    def triple(self) -> UpdateCollection:
        """{(D₀), (D₀, D₁), (D₀, …, D₄)}."""
        return UpdateCollection.of([self.singleton, self.insert_b, self.street_update])


def load_paper_fixtures(mode: OpMode = OpMode.paper, data_dir: Path = DATA_DIR) -> PaperFixtures:
    return PaperFixtures(mode, load_database(data_dir / "example_2_2.fodb"), data_dir)


@dataclass(frozen=True)
class Outcome:
    """A computed case value rendered as text, with its caveats."""

    value: str
    caveats: frozenset[Caveat] = frozenset()
    artifact: str | None = None

    @classmethod
    def of(cls, metric: MetricValue) -> Outcome:
        return cls(str(metric), metric.caveats)


Compute = Callable[[PaperFixtures, BoundConfig], Outcome]


@dataclass(frozen=True)
class CorpusCase:
    id: str
    inputs: tuple[str, ...]
    compute: Compute = field(repr=False)
    expected_derived: str
    expected_paper: str | None = None
    discrepancy: str | None = None


def render_set(formulas: Iterable[Formula]) -> str:
    return "{" + ", ".join(print_formula(f) for f in formulas) + "}"


def _flag(value: bool) -> str:
    return "true" if value else "false"


# --- Case builders ---


def _accepts(step: Callable[[PaperFixtures], object]) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        try:
            step(fx)
        except (OperationError, IllegalStepError) as exc:
            return Outcome(f"rejected: {exc}")
        return Outcome("accepted")

    return compute


def _rejection(step: Callable[[PaperFixtures], object]) -> Compute:
    """Like _accepts, but renders only the violated sentence or changed symbols."""

    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        try:
            step(fx)
        except IllegalStepError as exc:
            return Outcome(f"rejected ({exc.reason.rsplit('; step ', 1)[-1]})")
        except OperationError as exc:
            sentence = getattr(exc, "sentence", None)
            detail = print_formula(sentence) if sentence is not None else str(exc)
            return Outcome(f"rejected ({detail})")
        return Outcome("accepted")

    return compute


def _satisfactory(update: str, text: str) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        return Outcome(_flag(is_satisfactory(getattr(fx, update), fx.sentence(text))))

    return compute


def _complexity(update: str, text: str) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        coll = UpdateCollection.of([getattr(fx, update)])
        return Outcome.of(complexity(coll, fx.sentence(text)))

    return compute


def _relevant(update: str, texts: list[str]) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        formulas = [fx.sentence(t) for t in texts]
        return Outcome(render_set(relevant_propositions(getattr(fx, update), formulas, cfg)))

    return compute


def _relevancy(collection: str, deduction: str) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        return Outcome.of(relevancy(getattr(fx, collection), getattr(fx, deduction), cfg))

    return compute


def _informativity(collection: str, deduction: str) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        return Outcome.of(informativity(getattr(fx, collection), getattr(fx, deduction), cfg))

    return compute


def _proposition(collection: str, text: str) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        coll = getattr(fx, collection)
        return Outcome.of(informativity_of_proposition(coll, fx.sentence(text), cfg))

    return compute


def _conditional_proposition(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
    conditional = associated_conditional(fx.street_deduction)
    return Outcome.of(informativity_of_proposition(fx.triple, conditional, cfg))


def _conditional_theorem(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
    conditional = associated_conditional(fx.street_deduction)
    c = complexity(fx.triple, conditional)
    i = informativity_of_proposition(fx.triple, conditional, cfg)
    return Outcome(f"C={c}, I={i}", c.caveats | i.caveats)


def _exists_countermodel(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
    verdict = entails(fx.d0.theory, fx.sentence("exists x E(x)"), cfg)
    if verdict.witness is None:
        return Outcome(str(verdict))
    size = len(verdict.witness.domain)
    return Outcome(f"fails (size {size})", artifact=dump_structure(verdict.witness))


# --- Steps for the structural-operation cases ---


def _d1(fx: PaperFixtures) -> Database:
    return apply_operation(fx.d0, insert_constant("b", "A_"), fx.mode)


def _d2(fx: PaperFixtures) -> Database:
    return apply_operation(_d1(fx), insert_tuple("E", ElementRef("B_", fresh=True)), fx.mode)


def _d_star(fx: PaperFixtures) -> Database:
    return apply_operation(_d1(fx), insert_constant("b", "B_", fresh=True), fx.mode)


def _deletion(index: int) -> Compute:
    def compute(fx: PaperFixtures, cfg: BoundConfig) -> Outcome:
        breaks = fx.deletions.databases[index].theory_breaks
        return Outcome("accepted", frozenset({Caveat.theory_break}) if breaks else frozenset())

    return compute


def _a3_from_d_prime_1(fx: PaperFixtures) -> Update:
    d_prime_1 = fx.deletions.databases[1]
    return validate_update([d_prime_1, fx.a3_printed], [remove_tuple("C", "S_")], fx.mode)


EX_2_2 = ("example_2_2.fodb",)
UPD_D = (*EX_2_2, "update_D.ops")
UPD_DP = (*EX_2_2, "update_Dp.ops")
PAIR = (*EX_2_2, "update_D0.ops", "update_D.ops")
TRIPLE = (*PAIR, "update_Dpp.ops")


def paper_corpus() -> tuple[CorpusCase, ...]:
    """Every bundled case, in report order."""
    street = ["forall x (C(x) -> ~E(x))", "C(b)", "C(b) -> ~E(b)", "~E(b)"]
    return (
        # Insertions
        CorpusCase("Ex2.4-D1-insertion", EX_2_2, _accepts(_d1), "accepted", "accepted"),
        CorpusCase("Ex2.4-D2-insertion", EX_2_2, _accepts(_d2), "accepted", "accepted"),
        CorpusCase(
            "Ex2.4-Dstar-rejected",
            EX_2_2,
            _rejection(_d_star),
            "rejected (forall x (C(x) | E(x)))",
            "rejected (forall x (C(x) | E(x)))",
        ),
        # Deletions
        CorpusCase("Ex2.6-D'1-deletion", UPD_DP, _deletion(1), "accepted", "accepted"),
        CorpusCase("Ex2.6-D'2-deletion", UPD_DP, _deletion(2), "accepted", "accepted"),
        CorpusCase(
            "Ex2.6-D'3-from-D'1-rejected",
            (*UPD_DP, "example_2_6_a3.fodb"),
            _rejection(_a3_from_d_prime_1),
            "rejected (changes C, H)",
            "rejected (changes C, H)",
        ),
        # Satisfaction
        CorpusCase("Ex3.2-sat-Eb", UPD_D, _satisfactory("insert_b", "E(b)"), "true", "true"),
        CorpusCase("Ex3.2-sat-Hlb", UPD_D, _satisfactory("insert_b", "H(l,b)"), "true", "true"),
        CorpusCase(
            "Ex3.2-sat-Es-and-negHsa",
            UPD_DP,
            _satisfactory("deletions", "E(s) & ~H(s,a)"),
            "true",
            "true",
        ),
        CorpusCase(
            "Ex3.2-sat-s-eq-a", UPD_DP, _satisfactory("deletions", "s = a"), "true", "false", "PD-1"
        ),
        # Complexity
        CorpusCase("Ex3.4-C-Eb", UPD_D, _complexity("insert_b", "E(b)"), "1", "1"),
        CorpusCase("Ex3.4-C-Hlb", UPD_D, _complexity("insert_b", "H(l,b)"), "1", "1"),
        CorpusCase("Ex3.4-C-Eb-and-Hlb", UPD_D, _complexity("insert_b", "E(b) & H(l,b)"), "1", "1"),
        CorpusCase("Ex3.4-C-Eb-or-Hlb", UPD_D, _complexity("insert_b", "E(b) | H(l,b)"), "1", "1"),
        CorpusCase("Ex3.4-C-negCs", UPD_DP, _complexity("deletions", "~C(s)"), "1", "1"),
        CorpusCase(
            "Ex3.4-C-negHsa", UPD_DP, _complexity("deletions", "~H(s,a)"), "1", "3", "PD-5"
        ),
        CorpusCase("Ex3.4-C-s-eq-a", UPD_DP, _complexity("deletions", "s = a"), "1", "0", "PD-1"),
        CorpusCase(
            "Ex3.4-C-negCs-and-negHsa",
            UPD_DP,
            _complexity("deletions", "~C(s) & ~H(s,a)"),
            "1",
            "3",
            "PD-5",
        ),
        CorpusCase(
            "Ex3.4-C-negCs-and-s-eq-a",
            UPD_DP,
            _complexity("deletions", "~C(s) & s = a"),
            "1",
            "0",
            "PD-1",
        ),
        # Relevant propositions
        CorpusCase(
            "Ex4.2-relevant-first",
            EX_2_2,
            _relevant("singleton", ["E(a)", "exists x E(x)"]),
            "{E(a), exists x E(x)}",
            "{E(a)}",
            "PD-2",
        ),
        CorpusCase(
            "Ex4.2-relevant-second",
            UPD_D,
            _relevant("insert_b", street),
            "{forall x (C(x) -> ~E(x)), C(b) -> ~E(b)}",
            "{forall x (C(x) -> ~E(x)), C(b) -> ~E(b)}",
        ),
        CorpusCase(
            "Ex4.2-countermodel-exists",
            EX_2_2,
            _exists_countermodel,
            "fails (size 1)",
            discrepancy="PD-2",
        ),
        # Relevancy
        CorpusCase(
            "Ex4.5-R-Ea-exists", PAIR, _relevancy("pair", "exists_deduction"), "1", "1"
        ),
        CorpusCase(
            "Ex4.5-R-street-pair", PAIR, _relevancy("pair", "street_deduction"), "0", "0"
        ),
        CorpusCase(
            "Ex4.5-R-street-triple", TRIPLE, _relevancy("triple", "street_deduction"), "2/3", "2/3"
        ),
        # Informativity
        CorpusCase(
            "Ex5.2-I-Ea-exists",
            TRIPLE,
            _informativity("triple", "exists_deduction"),
            "0",
            "1",
            "PD-4",
        ),
        CorpusCase(
            "Ex5.2-I-second-deduction",
            TRIPLE,
            _informativity("triple", "street_deduction"),
            "8/3",
            "8/3",
        ),
        CorpusCase("Ex5.4-I-Ea", TRIPLE, _proposition("triple", "E(a)"), "0", "0"),
        CorpusCase("Ex5.4-I-exists-Ex", TRIPLE, _proposition("triple", "exists x E(x)"), "0", "0"),
        CorpusCase(
            "Ex5.4-I-Ea-implies-exists",
            TRIPLE,
            _proposition("triple", "E(a) -> exists x E(x)"),
            "0",
            "0",
        ),
        CorpusCase(
            "Ex5.4-I-forall-C-notE",
            TRIPLE,
            _proposition("triple", "forall x (C(x) -> ~E(x))"),
            "0",
            "0",
        ),
        CorpusCase("Ex5.4-I-Cb", TRIPLE, _proposition("triple", "C(b)"), "0", "0"),
        CorpusCase("Ex5.4-I-negEb", TRIPLE, _proposition("triple", "~E(b)"), "4", "4"),
        CorpusCase("Ex5.4-I-conditional", TRIPLE, _conditional_proposition, "0", "0"),
        CorpusCase(
            "Thm5.3-conditional-I-vs-C",
            TRIPLE,
            _conditional_theorem,
            "C=1, I=0",
            "I=C",
            "PD-3",
        ),
    )
