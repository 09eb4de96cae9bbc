"""CLI entry point: stagec."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from stagec.engine.audit import build_audit_event, write_audit_event
from stagec.engine.compiler import COMMANDS, CommandOutput, Compiler
from stagec.kernel.builtins import CATALOGUE
from stagec.kernel.pretty import pretty_type
from stagec.models.config import CompilerConfig
from stagec.util.errors import (
    InvariantFailure,
    StagecError,
    StuckEvaluation,
    SurfaceError,
)
from stagec.util.io import load_config_yaml

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2


def _color_enabled(config: CompilerConfig) -> bool:
    if os.environ.get("STAGEC_COLOR") == "0":
        return False
    return config.color and sys.stderr.isatty()


def _diagnostic(where: str, err: BaseException, color: bool) -> str:
    kind = getattr(err, "kind", type(err).__name__)
    message = getattr(err, "message", None) or str(err)
    if isinstance(err, SurfaceError) and err.line is not None:
        where = f"{where}:{err.line}:{err.column}"
    label = "\033[1;31merror\033[0m" if color else "error"
    return f"{where}: {label}: {kind}: {message}"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _builtins_listing() -> str:
    lines = []
    for name, entry in CATALOGUE.items():
        ty = entry.make(*entry.default).ty
        variants = ", ".join(f"{ph}/{st}" for ph, st in entry.variants)
        lines.append(f"{name} : {pretty_type(ty)}  -- {entry.summary} [{variants}]")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stagec",
        description="Type-check and stage two-level programs; simulate staged circuits.",
    )
    parser.add_argument("command", choices=COMMANDS + ("builtins",), help="What to do.")
    parser.add_argument("file", nargs="?", default=None, help="Path to a .2lt source file.")
    parser.add_argument("--def", dest="def_name", default=None, help="Def to stage (default: main).")
    parser.add_argument(
        "--profile", choices=("full", "circuit"), default=None,
        help="circuit: dynamic types are restricted to circuits.",
    )
    parser.add_argument("--inputs", default=None, help="Input bit string for run, e.g. 01.")
    parser.add_argument("--output", "-o", default=None, help="Write output here instead of stdout.")
    parser.add_argument(
        "--phase", choices=("src", "stg"), default=None,
        help="Phase to elaborate in for check (stg reads staged output).",
    )
    parser.add_argument("--config", default=None, help="Path to compiler config YAML.")
    parser.add_argument(
        "--audit-log", default=None,
        help="Path to JSONL audit log. If set, appends an audit event.",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    where = args.file or "stagec"

    try:
        config = load_config_yaml(args.config) if args.config else CompilerConfig()
    except StagecError as e:
        print(_diagnostic(args.config, e, False), file=sys.stderr)
        return EXIT_USER
    overrides = {
        key: value
        for key, value in (("profile", args.profile), ("phase", args.phase), ("entry", args.def_name))
        if value is not None
    }
    config = config.model_copy(update=overrides)
    color = _color_enabled(config)

    if args.command == "builtins":
        _emit(_builtins_listing(), args.output)
        return EXIT_OK
    if args.file is None:
        print(f"stagec: error: {args.command} needs a source file", file=sys.stderr)
        return EXIT_USER

    try:
        compiler = Compiler(args.file, config)
    except (OSError, StagecError) as e:
        print(_diagnostic(where, e, color), file=sys.stderr)
        return EXIT_USER

    result: Optional[CommandOutput] = None
    error: Optional[BaseException] = None
    code = EXIT_OK
    try:
        result = compiler.run_command(args.command, config.entry, inputs=args.inputs, phase=config.phase)
        _emit(result.text, args.output)
    except (StuckEvaluation, InvariantFailure) as e:
        error, code = e, EXIT_INTERNAL
    except StagecError as e:
        error, code = e, EXIT_USER
    except OSError as e:
        error, code = e, EXIT_USER
    except Exception as e:  # internal bug; report and fail closed
        error, code = e, EXIT_INTERNAL

    if error is not None:
        print(_diagnostic(where, error, color), file=sys.stderr)

    if args.audit_log:
        event = build_audit_event(
            command=args.command,
            source_hash=compiler.source_hash,
            def_name=config.entry,
            profile=config.profile,
            output=result.text if result else None,
            error=_diagnostic(where, error, False) if error else None,
            stage_ms=result.stage_ms if result else None,
            inputs=args.inputs,
            phase=config.phase if args.command == "check" else None,
            max_table_inputs=config.max_table_inputs,
        )
        write_audit_event(args.audit_log, event)

    return code


if __name__ == "__main__":
    sys.exit(main())
