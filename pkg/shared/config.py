"""Engine settings. Reads `informativity.yaml` under the `engine:` section.

The file is looked up from the working directory towards the filesystem root
unless `INFORMATIVITY_CONFIG` names one explicitly. Environment variables take
precedence over the file:

- INFORMATIVITY_MODE: `paper` or `strict`
- INFORMATIVITY_BOUND: maximum countermodel domain size
- INFORMATIVITY_DEPTH: update search depth
- INFORMATIVITY_FRESH: fresh elements allowed per operation during search
- INFORMATIVITY_MAX_NODES: countermodel search node cap
- INFORMATIVITY_LOG_LEVEL: logging level name
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, Field, field_validator

from .types import OpMode

CONFIG_FILENAME = "informativity.yaml"
SECTION = "engine"

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

_ENV_FIELDS = {
    "INFORMATIVITY_MODE": "mode",
    "INFORMATIVITY_BOUND": "bound",
    "INFORMATIVITY_DEPTH": "depth",
    "INFORMATIVITY_FRESH": "fresh",
    "INFORMATIVITY_MAX_NODES": "max_nodes",
    "INFORMATIVITY_LOG_LEVEL": "log_level",
}


class EngineSettings(BaseModel):
    """Defaults for every command; CLI flags override them."""

    mode: OpMode = OpMode.paper
    bound: int = Field(default=4, ge=1)
    depth: int = Field(default=4, ge=0)
    fresh: int = Field(default=2, ge=0)
    max_nodes: int = Field(default=2_000_000, ge=1)
    log_level: LogLevel = "WARNING"

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_case_level(cls, value: Any) -> Any:
        return value.upper() if isinstance(value, str) else value


def find_config_file(start_path: Path | None = None) -> Path | None:
    """Walk from start_path up to the root looking for CONFIG_FILENAME."""
    current = Path(start_path) if start_path else Path.cwd()
    for parent in [current, *current.parents]:
        candidate = parent / CONFIG_FILENAME
        if candidate.is_file():
            return candidate
    return None


def read_section(config_file: str | Path, section: str = SECTION) -> dict[str, Any]:
    """Return one top-level mapping from a YAML file, {} when absent or malformed."""
    path = Path(config_file)
    if not path.is_file():
        return {}
    with open(path, encoding="utf-8") as f:
        content = yaml.safe_load(f)
    if not isinstance(content, dict):
        return {}
    value = content.get(section)
    return dict(value) if isinstance(value, dict) else {}


def load_settings(config_file: str | Path | None = None) -> EngineSettings:
    """Build EngineSettings from file, then environment.

    Raises:
        pydantic.ValidationError: if a value is out of range.
    """
    if config_file is None:
        config_file = os.environ.get("INFORMATIVITY_CONFIG") or find_config_file()
    values = read_section(config_file) if config_file else {}

    for env_name, field_name in _ENV_FIELDS.items():
        if raw := os.environ.get(env_name):
            values[field_name] = raw

    return EngineSettings(**values)
