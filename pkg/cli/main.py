"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 validation error, 3 a value
was computed but depends on an unknown entailment verdict.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pydantic import ValidationError

from engine import (
    BoundConfig,
    Deduction,
    MetricValue,
    UpdateCollection,
    complexity,
    complexity_of_set,
    entails,
    informativity,
    informativity_of_proposition,
    relevancy,
    search_minimal_update,
)
from logic import evaluate, interprets, parse_sentence, print_formula
from shared.config import EngineSettings, load_settings
from shared.errors import (
    ArityError,
    FormulaSyntaxError,
    InformativityError,
    NotASentenceError,
)
from shared.types import OpMode

from .formats import (
    dump_database,
    dump_ops,
    dump_structure,
    load_database,
    load_deduction,
    load_ops_script,
)
from .report import run_paper_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CAVEATED = 3

_PARSE_ERRORS = (FormulaSyntaxError, ArityError, NotASentenceError)


def _mode(value: str | None, settings: EngineSettings) -> OpMode:
    return OpMode(value) if value else settings.mode


def _bound(args: argparse.Namespace, settings: EngineSettings) -> BoundConfig:
    bound = args.bound if args.bound is not None else settings.bound
    return BoundConfig(max_domain=bound, max_nodes=settings.max_nodes)


def _write(text: str, out: Path | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


# =============================================================================
# Commands
# =============================================================================


def cmd_check(args: argparse.Namespace, settings: EngineSettings) -> int:
    d = load_database(args.db)
    print(f"correct: {len(d.structure.domain)} element(s), {len(d.theory)} sentence(s)")
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, settings: EngineSettings) -> int:
    d = load_database(args.db)
    f = parse_sentence(args.formula, d.sig)
    print("true" if evaluate(d.structure, f) else "false")
    if not interprets(d.structure, f):
        logger.warning("formula mentions symbols outside the signature of %s", args.db)
        print("warning: out-of-signature")
    return EXIT_OK


def cmd_apply(args: argparse.Namespace, settings: EngineSettings) -> int:
    base = load_database(args.db)
    update = load_ops_script(args.ops, base, _mode(args.mode, settings))
    final = update.final
    for f in final.theory_breaks:
        logger.warning("final structure falsifies %s", print_formula(f))
    _write(dump_database(final), args.output)
    return EXIT_OK


def cmd_entails(args: argparse.Namespace, settings: EngineSettings) -> int:
    d = load_database(args.db)
    cfg = _bound(args, settings)
    verdict = entails(d.theory, parse_sentence(args.formula, d.sig), cfg)
    print(verdict)
    if verdict.witness is not None:
        print(dump_structure(verdict.witness), end="")
    return EXIT_CAVEATED if verdict.is_unknown else EXIT_OK


def cmd_search(args: argparse.Namespace, settings: EngineSettings) -> int:
    d = load_database(args.db)
    f = parse_sentence(args.formula, d.sig)
    depth = args.depth if args.depth is not None else settings.depth
    fresh = args.fresh if args.fresh is not None else settings.fresh
    found = search_minimal_update(d, f, depth, fresh, _mode(args.mode, settings))
    if found is None:
        print(f"no satisfactory update within depth {depth} (fresh {fresh})")
        return EXIT_OK
    print(f"norm: {len(found) - 1}")
    print(dump_ops(found.ops), end="")
    return EXIT_OK


def _collection(args: argparse.Namespace, settings: EngineSettings) -> UpdateCollection:
    base = load_database(args.db)
    mode = _mode(args.mode, settings)
    return UpdateCollection.of(load_ops_script(path, base, mode) for path in args.updates)


def _metric(name: str) -> Callable[[argparse.Namespace, EngineSettings], int]:
    def run(args: argparse.Namespace, settings: EngineSettings) -> int:
        coll = _collection(args, settings)
        cfg = _bound(args, settings)
        sig = coll[0].base.sig
        value: MetricValue
        if args.deduction is not None:
            ded = load_deduction(args.deduction, sig)
            if name == "complexity":
                value = complexity_of_set(coll, ded.support.members)
            elif name == "relevancy":
                value = relevancy(coll, ded, cfg)
            else:
                value = informativity(coll, ded, cfg)
        else:
            f = parse_sentence(args.formula, sig)
            if name == "complexity":
                value = complexity(coll, f)
            elif name == "relevancy":
                value = relevancy(coll, Deduction.single(f), cfg)
            else:
                value = informativity_of_proposition(coll, f, cfg)
        _print_metric(name, value, _mode(args.mode, settings), cfg.max_domain)
        return EXIT_OK if value.is_conclusive else EXIT_CAVEATED

    return run


def _print_metric(name: str, value: MetricValue, mode: OpMode, bound: int) -> None:
    print(f"{name}: {value}")
    print(f"mode: {mode.value}  bound: {bound}")
    if value.chosen_update is not None:
        print(f"chosen update: {value.chosen_update}")
    if value.relevant is not None:
        print("relevant: {" + ", ".join(print_formula(f) for f in value.relevant) + "}")
    if value.caveats:
        print("caveats: " + ", ".join(sorted(c.value for c in value.caveats)))


def cmd_paper_report(args: argparse.Namespace, settings: EngineSettings) -> int:
    report = run_paper_report(_mode(args.mode, settings), _bound(args, settings))
    _write(report.to_json() if args.json else report.render())
    return EXIT_OK if report.ok else EXIT_INVALID


# =============================================================================
# Parser
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="informativity",
        description="Semantic informativity of first-order deductions over database updates.",
    )
    parser.add_argument("--config", type=Path, help="settings file (informativity.yaml)")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    modes = [m.value for m in OpMode]

    p = sub.add_parser("check", help="validate a database file")
    p.add_argument("db", type=Path)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate a sentence in a database")
    p.add_argument("db", type=Path)
    p.add_argument("--formula", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("apply", help="apply an operation script and print the final database")
    p.add_argument("db", type=Path)
    p.add_argument("ops", type=Path)
    p.add_argument("--mode", choices=modes)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("entails", help="bounded check that the theory entails a sentence")
    p.add_argument("db", type=Path)
    p.add_argument("--formula", required=True)
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_entails)

    p = sub.add_parser("search", help="find a satisfactory update of minimal norm")
    p.add_argument("db", type=Path)
    p.add_argument("--formula", required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--fresh", type=int)
    p.add_argument("--mode", choices=modes)
    p.set_defaults(func=cmd_search)

    for name in ("complexity", "relevancy", "informativity"):
        p = sub.add_parser(name, help=f"{name} over a collection of updates")
        p.add_argument("--db", type=Path, required=True)
        p.add_argument("--updates", type=Path, nargs="+", required=True)
        target = p.add_mutually_exclusive_group(required=True)
        target.add_argument("--formula")
        target.add_argument("--deduction", type=Path)
        p.add_argument("--bound", type=int)
        p.add_argument("--mode", choices=modes)
        p.set_defaults(func=_metric(name))

    p = sub.add_parser("paper-report", help="recompute the bundled worked examples")
    p.add_argument("--mode", choices=modes)
    p.add_argument("--bound", type=int)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_paper_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        settings = load_settings(args.config)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else settings.log_level,
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        return int(args.func(args, settings))
    except (*_PARSE_ERRORS, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InformativityError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
