"""Databases, structural operations, updates and informativity metrics.

Quick Start:
    from engine import Deduction, UpdateCollection, build_update, informativity

    coll = UpdateCollection.of([build_update(d0, ops)])
    informativity(coll, Deduction.of(premises, conclusion)).value
"""

# Databases
from .database import Correctness, Database, Theory, is_correct, make_database

# Deductions
from .deduction import Deduction, Support, associated_conditional

# Entailment
from .entailment import BoundConfig, Verdict, entails, is_tautology, is_valid_deduction

# Metrics
from .metrics import (
    MetricValue,
    complexity,
    complexity_of_set,
    format_rational,
    informativity,
    informativity_of_proposition,
    relevancy,
    relevant_propositions,
)

# Structural operations
from .operations import (
    BindConstant,
    DropSymbol,
    ElementRef,
    InsertTuple,
    OperationDescriptor,
    ReinterpretConstant,
    RemoveTuple,
    apply_deletion,
    apply_insertion,
    apply_operation,
    drop_symbol,
    enumerate_successors,
    free_for,
    fresh_labels,
    insert_constant,
    insert_tuple,
    reinterpret_constant,
    remove_tuple,
)

# Updates
from .updates import (
    Acceptability,
    Update,
    UpdateCollection,
    build_update,
    is_acceptable,
    is_satisfactory,
    norm,
    search_minimal_update,
    validate_update,
)

__all__ = [
    # Databases
    "Theory",
    "Database",
    "Correctness",
    "make_database",
    "is_correct",
    # Structural operations
    "ElementRef",
    "BindConstant",
    "InsertTuple",
    "ReinterpretConstant",
    "RemoveTuple",
    "DropSymbol",
    "OperationDescriptor",
    "insert_constant",
    "insert_tuple",
    "reinterpret_constant",
    "remove_tuple",
    "drop_symbol",
    "apply_insertion",
    "apply_deletion",
    "apply_operation",
    "free_for",
    "fresh_labels",
    "enumerate_successors",
    # Updates
    "Update",
    "UpdateCollection",
    "Acceptability",
    "validate_update",
    "build_update",
    "is_satisfactory",
    "norm",
    "is_acceptable",
    "search_minimal_update",
    # Deductions
    "Deduction",
    "Support",
    "associated_conditional",
    # Entailment
    "BoundConfig",
    "Verdict",
    "entails",
    "is_tautology",
    "is_valid_deduction",
    # Metrics
    "MetricValue",
    "format_rational",
    "complexity",
    "complexity_of_set",
    "relevant_propositions",
    "relevancy",
    "informativity",
    "informativity_of_proposition",
]
