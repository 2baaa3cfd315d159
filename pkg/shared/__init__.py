"""Types, errors and settings shared by the logic, engine and cli packages."""

from .config import CONFIG_FILENAME, EngineSettings, find_config_file, load_settings, read_section
from .errors import (
    ArityError,
    CorrectnessError,
    FormulaSyntaxError,
    IllegalStepError,
    InformativityError,
    NotASentenceError,
    NotSatisfactoryError,
    OperationError,
    ProvisoViolation,
    StructureError,
)
from .types import Caveat, OpKind, OpMode, SymbolKind, VerdictKind

__all__ = [
    "Caveat",
    "OpKind",
    "OpMode",
    "SymbolKind",
    "VerdictKind",
    "CONFIG_FILENAME",
    "EngineSettings",
    "find_config_file",
    "load_settings",
    "read_section",
    "InformativityError",
    "FormulaSyntaxError",
    "ArityError",
    "NotASentenceError",
    "StructureError",
    "CorrectnessError",
    "OperationError",
    "ProvisoViolation",
    "IllegalStepError",
    "NotSatisfactoryError",
]
