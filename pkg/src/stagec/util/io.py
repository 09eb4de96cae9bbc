"""Strict YAML loading with Pydantic validation."""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import ValidationError

from stagec.models.config import CompilerConfig
from stagec.util.errors import ConfigLoadError, SurfaceSyntaxError


def load_config_yaml(path: str | Path) -> CompilerConfig:
    """Load and validate a CompilerConfig from a YAML file."""
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except (OSError, yaml.YAMLError) as e:
        raise ConfigLoadError(f"Cannot read config {path}: {e}") from e
    if raw is None:
        return CompilerConfig()
    if not isinstance(raw, dict):
        raise ConfigLoadError("Config YAML must parse to a mapping at top level.")
    try:
        return CompilerConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigLoadError(f"Config validation failed: {e}") from e


def read_source(path: str | Path) -> str:
    """Read a .2lt file as UTF-8; undecodable bytes are a syntax error at their position."""
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        before = data[: e.start]
        line = before.count(b"\n") + 1
        column = e.start - (before.rfind(b"\n") + 1) + 1
        raise SurfaceSyntaxError(
            f"source is not valid UTF-8 (byte 0x{data[e.start]:02x})", line, column
        ) from e
    return text.replace("\r\n", "\n").replace("\r", "\n")
