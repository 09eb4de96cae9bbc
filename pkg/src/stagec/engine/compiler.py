"""Top-level Compiler: load a source file, elaborate, stage, render outputs."""

from __future__ import annotations

import time
from pathlib import Path
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

from stagec.circuits.dot import emit_dot
from stagec.circuits.netlist import dump_netlist, to_netlist
from stagec.circuits.simulate import format_bits, format_row, parse_bits, simulate, truth_table
from stagec.engine.stager import stage
from stagec.kernel.pretty import pretty_def
from stagec.models.config import CompilerConfig
from stagec.models.netlist import Netlist
from stagec.models.terms import Term
from stagec.models.types import Phase, Ty, as_staged
from stagec.surface.elaborate import ElaboratedDef, elaborate, find_def
from stagec.surface.parse import parse
from stagec.surface.syntax import Program
from stagec.util.errors import ArityMismatch, ElaborationError, StageError
from stagec.util.hashing import source_hash
from stagec.util.io import read_source

Command = Literal["check", "stage", "run", "table", "dot", "netlist"]

COMMANDS = ("check", "stage", "run", "table", "dot", "netlist")


class StageResult(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    ty: Ty
    term: Term
    stage_ms: float

    @property
    def text(self) -> str:
        return pretty_def(self.name, self.ty, self.term)


class CommandOutput(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    text: str
    stage_ms: Optional[float] = None


class Compiler:
    """Deterministic staging compiler for one source file."""

    def __init__(
        self,
        source_path: str | Path,
        config: Optional[CompilerConfig] = None,
    ) -> None:
        self._source_path = Path(source_path)
        self._source_raw = read_source(self._source_path)
        self._source_hash: str = source_hash(self._source_raw)
        self._config = config or CompilerConfig()
        self._program: Optional[Program] = None
        self._elaborated: Dict[Phase, List[ElaboratedDef]] = {}

    @property
    def config(self) -> CompilerConfig:
        return self._config

    @property
    def source_hash(self) -> str:
        return self._source_hash

    @property
    def program(self) -> Program:
        if self._program is None:
            self._program = parse(self._source_raw)
        return self._program

    def elaborate(self, phase: Optional[Phase] = None) -> List[ElaboratedDef]:
        phase = phase or self._config.phase
        if phase not in self._elaborated:
            self._elaborated[phase] = elaborate(self.program, phase=phase, profile=self._config.profile)
        return self._elaborated[phase]

    def entry(self, name: Optional[str] = None) -> ElaboratedDef:
        name = name or self._config.entry
        found = find_def(self.elaborate("src"), name)
        if found is None:
            raise ElaborationError(f"no def named '{name}'")
        return found

    def stage(self, name: Optional[str] = None) -> StageResult:
        """Stage a (src, dyn) def and time it."""
        d = self.entry(name)
        if d.ty.indices != ("src", "dyn"):
            sdef = self.program.find(d.name)
            line, column = (sdef.line, sdef.column) if sdef else (None, None)
            raise StageError(f"def '{d.name}' is static; only dynamic defs can be staged", line, column)
        t0 = time.perf_counter_ns()
        staged = stage(d.term)
        t1 = time.perf_counter_ns()
        return StageResult(
            name=d.name,
            ty=as_staged(d.ty),
            term=staged,
            stage_ms=round((t1 - t0) / 1_000_000, 3),
        )

    def netlist(self, name: Optional[str] = None) -> tuple[Netlist, StageResult]:
        result = self.stage(name)
        return to_netlist(result.term), result

    def run_command(
        self,
        command: Command,
        name: Optional[str] = None,
        inputs: Optional[str] = None,
        phase: Optional[Phase] = None,
    ) -> CommandOutput:
        """Produce the text a CLI command prints, newline-terminated."""
        if command == "check":
            self.elaborate(phase)
            return CommandOutput(text="ok\n")
        if command == "stage":
            result = self.stage(name)
            return CommandOutput(text=result.text + "\n", stage_ms=result.stage_ms)
        netlist, result = self.netlist(name)
        if command == "run":
            if inputs is None:
                raise ArityMismatch("run needs --inputs")
            text = format_bits(simulate(netlist, parse_bits(inputs))) + "\n"
        elif command == "table":
            rows = truth_table(netlist, self._config.max_table_inputs)
            text = "".join(format_row(i, o) + "\n" for i, o in rows)
        elif command == "dot":
            text = emit_dot(netlist)
        elif command == "netlist":
            text = dump_netlist(netlist)
        else:
            raise ValueError(f"unknown command {command!r}")
        return CommandOutput(text=text, stage_ms=result.stage_ms)
