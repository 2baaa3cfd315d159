"""Internal implementation details for the engine package.

These modules are not part of the public API and may change without notice.
"""

from .model_finder import SearchResult, evaluate_partial, find_countermodel

__all__ = [
    "SearchResult",
    "evaluate_partial",
    "find_countermodel",
]
