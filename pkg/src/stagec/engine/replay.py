"""Replay audit events to verify determinism.

Given a recorded event and the source file it was produced from, re-run
the command. The replayed output must match the recorded one exactly.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

from stagec.engine.compiler import Compiler
from stagec.models.config import CompilerConfig
from stagec.util.errors import ReplayMismatch, StagecError


def replay_event(
    event: Dict[str, Any],
    source_path: str | Path,
) -> tuple[Optional[str], Optional[str]]:
    """Replay a single audit event.

    Returns (recorded_output, replayed_output); an error outcome replays
    to None. Raises ReplayMismatch if the source changed since recording.
    """
    settings: Dict[str, Any] = {"profile": event["profile"]}
    if "max_table_inputs" in event:
        settings["max_table_inputs"] = event["max_table_inputs"]
    compiler = Compiler(source_path, CompilerConfig(**settings))
    if compiler.source_hash != event["source_hash"]:
        raise ReplayMismatch(
            f"source hash {compiler.source_hash[:12]} differs from the recorded {event['source_hash'][:12]}"
        )
    try:
        replayed: Optional[str] = compiler.run_command(
            event["command"], event["def_name"], inputs=event.get("inputs"), phase=event.get("phase")
        ).text
    except StagecError:
        replayed = None
    return event.get("output"), replayed


def outputs_match(a: Optional[str], b: Optional[str]) -> bool:
    """Byte-for-byte comparison of two command outputs."""
    return a == b
