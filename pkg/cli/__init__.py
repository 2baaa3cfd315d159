"""File formats, the bundled worked-example corpus, the paper report and the
`informativity` command.

Quick Start:
    from cli import load_database, load_ops_script, run_paper_report

    d0 = load_database("example_2_2.fodb")
    update = load_ops_script("update_D.ops", d0)
    print(run_paper_report().render())
"""

# Bundled corpus
from .corpus import DATA_DIR, CorpusCase, PaperFixtures, load_paper_fixtures, paper_corpus

# File formats
from .formats import (
    ScriptLine,
    dump_database,
    dump_deduction,
    dump_ops,
    dump_structure,
    load_database,
    load_deduction,
    load_ops_script,
    ops_from_script,
    parse_database,
    parse_deduction,
    parse_ops,
)

# Entry point
from .main import main

# Report
from .report import CaseResult, DiscrepancyEntry, Report, run_paper_report

__all__ = [
    # File formats
    "ScriptLine",
    "parse_database",
    "load_database",
    "dump_structure",
    "dump_database",
    "parse_ops",
    "ops_from_script",
    "load_ops_script",
    "dump_ops",
    "parse_deduction",
    "load_deduction",
    "dump_deduction",
    # Bundled corpus
    "DATA_DIR",
    "CorpusCase",
    "PaperFixtures",
    "load_paper_fixtures",
    "paper_corpus",
    # Report
    "CaseResult",
    "DiscrepancyEntry",
    "Report",
    "run_paper_report",
    # Entry point
    "main",
]
