"""Updates: sequences of databases linked by single structural operations."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from logic import Formula, Structure, canonical_encoding, changed_symbols, evaluate, symbols_of
from logic.syntax import require_sentence
from shared.errors import (
    ArityError,
    IllegalStepError,
    InformativityError,
    NotSatisfactoryError,
    OperationError,
)
from shared.types import OpMode

from .database import Database
from .operations import OperationDescriptor, apply_operation, enumerate_successors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Update:
    """A finite update D₀, …, Dₙ with the operation behind each step.

    Build instances through `validate_update`, `build_update` or
    `search_minimal_update`; the constructor does not re-check the steps.
    """

    databases: tuple[Database, ...]
    ops: tuple[OperationDescriptor, ...]
    mode: OpMode = OpMode.paper

    def __post_init__(self) -> None:
        if not self.databases:
            raise IllegalStepError(0, "an update needs at least one database")
        if len(self.ops) != len(self.databases) - 1:
            raise IllegalStepError(
                len(self.ops), f"{len(self.databases)} databases need {len(self.databases) - 1} ops"
            )

    @property
    def base(self) -> Database:
        return self.databases[0]

    @property
    def final(self) -> Database:
        return self.databases[-1]

    @property
    def structures(self) -> tuple[Structure, ...]:
        return tuple(d.structure for d in self.databases)

    def __len__(self) -> int:
        return len(self.databases)

    def __iter__(self) -> Iterator[Database]:
        return iter(self.databases)


@dataclass(frozen=True)
class UpdateCollection:
    """Updates of one base database, in a fixed order."""

    updates: tuple[Update, ...] = ()

    def __post_init__(self) -> None:
        if not self.updates:
            return
        base = canonical_encoding(self.updates[0].base.structure)
        for i, u in enumerate(self.updates[1:], start=1):
            if canonical_encoding(u.base.structure) != base:
                raise InformativityError(f"update {i} starts from a different base database")

    @classmethod
    def of(cls, updates: Iterable[Update]) -> UpdateCollection:
        return cls(tuple(updates))

    def __iter__(self) -> Iterator[Update]:
        return iter(self.updates)

    def __len__(self) -> int:
        return len(self.updates)

    def __getitem__(self, index: int) -> Update:
        return self.updates[index]


def validate_update(
    dbs: Sequence[Database],
    ops: Sequence[OperationDescriptor],
    mode: OpMode = OpMode.paper,
) -> Update:
    """Check that each database is the previous one with its operation applied.

    Raises:
        IllegalStepError: naming the index of the first illegal operation.
    """
    if not dbs:
        raise IllegalStepError(0, "an update needs at least one database")
    if len(ops) != len(dbs) - 1:
        raise IllegalStepError(len(ops), f"{len(dbs)} databases need {len(dbs) - 1} ops")
    theory = dbs[0].theory
    for i, (before, op, after) in enumerate(zip(dbs[:-1], ops, dbs[1:], strict=True)):
        if after.theory != theory:
            raise IllegalStepError(i, "theory differs from the base theory")
        try:
            expected = apply_operation(before, op, mode, warn=False)
        except (OperationError, ArityError) as exc:
            raise IllegalStepError(i, f"{op}: {exc}") from exc
        if canonical_encoding(expected.structure) != canonical_encoding(after.structure):
            changed = changed_symbols(before.structure, after.structure)
            what = f"changes {', '.join(changed)}" if changed else "changes the domain"
            raise IllegalStepError(i, f"not the result of {op}; step {what}")
    return Update(tuple(dbs), tuple(ops), mode)


def build_update(
    base: Database, ops: Iterable[OperationDescriptor], mode: OpMode = OpMode.paper
) -> Update:
    """Apply ops in sequence from base.

    Raises:
        IllegalStepError: if an operation is illegal, with its index.
    """
    dbs = [base]
    applied: list[OperationDescriptor] = []
    for i, op in enumerate(ops):
        try:
            dbs.append(apply_operation(dbs[-1], op, mode))
        except (OperationError, ArityError) as exc:
            raise IllegalStepError(i, f"{op}: {exc}") from exc
        applied.append(op)
    return validate_update(dbs, applied, mode)


def is_satisfactory(u: Update, f: Formula) -> bool:
    """True iff the final structure of u satisfies f."""
    return evaluate(u.final.structure, f)


def norm(u: Update, f: Formula) -> int:
    """Least index whose structure satisfies f.

    Raises:
        NotSatisfactoryError: if u is not satisfactory for f.
    """
    if not is_satisfactory(u, f):
        raise NotSatisfactoryError("the update is not satisfactory for the formula")
    return next(i for i, d in enumerate(u.databases) if evaluate(d.structure, f))


def search_minimal_update(
    d: Database,
    f: Formula,
    depth: int = 4,
    fresh_budget: int = 2,
    mode: OpMode = OpMode.paper,
) -> Update | None:
    """Breadth-first search for a satisfactory update of minimal norm.

    Symbols of f missing from d's signature form the pool of symbols that may
    be inserted. States are deduplicated by canonical encoding. The first
    state satisfying f, in level order and then successor order, ends the
    witness; its level is the minimal norm.
    """
    require_sentence(f)
    if evaluate(d.structure, f):
        return Update((d,), (), mode)

    pool = {s for s in symbols_of(f) if s.name not in d.sig}
    visited = {canonical_encoding(d.structure)}
    frontier: deque[tuple[tuple[Database, ...], tuple[OperationDescriptor, ...]]] = deque(
        [((d,), ())]
    )

    for level in range(1, depth + 1):
        next_frontier: deque[tuple[tuple[Database, ...], tuple[OperationDescriptor, ...]]]
        next_frontier = deque()
        while frontier:
            path, ops = frontier.popleft()
            for op, successor in enumerate_successors(path[-1], mode, fresh_budget, pool):
                encoding = canonical_encoding(successor.structure)
                if encoding in visited:
                    continue
                visited.add(encoding)
                if evaluate(successor.structure, f):
                    logger.info("satisfactory update found at level %d", level)
                    return Update((*path, successor), (*ops, op), mode)
                next_frontier.append(((*path, successor), (*ops, op)))
        logger.debug("level %d: %d new state(s)", level, len(next_frontier))
        frontier = next_frontier
        if not frontier:
            break

    logger.info("no satisfactory update within depth %d", depth)
    return None


@dataclass(frozen=True)
class Acceptability:
    """Outcome of a bounded acceptability check.

    A witness is conclusive. No witness only means none exists within the
    search bounds.
    """

    witness: Update | None
    depth: int
    fresh_budget: int

    @property
    def acceptable(self) -> bool:
        return self.witness is not None


def is_acceptable(
    d: Database,
    f: Formula,
    depth: int = 4,
    fresh_budget: int = 2,
    mode: OpMode = OpMode.paper,
) -> Acceptability:
    witness = search_minimal_update(d, f, depth, fresh_budget, mode)
    return Acceptability(witness, depth, fresh_budget)
