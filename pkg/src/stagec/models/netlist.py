"""Flattened circuits: NAND gates in topological order."""

from __future__ import annotations

from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class WireRef(BaseModel):
    """A circuit input (`inI`) or the output of an earlier gate (`gK`)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["in", "gate"]
    index: int = Field(..., ge=0)

    def __str__(self) -> str:
        return f"in{self.index}" if self.kind == "in" else f"g{self.index}"


def input_ref(i: int) -> WireRef:
    return WireRef(kind="in", index=i)


def gate_ref(k: int) -> WireRef:
    return WireRef(kind="gate", index=k)


class NandGate(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    a: WireRef
    b: WireRef


class Netlist(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    inputs: int = Field(..., ge=0)
    outputs: int = Field(..., ge=0)
    gates: Tuple[NandGate, ...] = ()
    output_map: Tuple[WireRef, ...] = ()

    @model_validator(mode="after")
    def _acyclic_wiring(self):
        if len(self.output_map) != self.outputs:
            raise ValueError(f"{len(self.output_map)} output wires for {self.outputs} outputs")
        for k, gate in enumerate(self.gates):
            for ref in (gate.a, gate.b):
                if not self._defined(ref, k):
                    raise ValueError(f"gate g{k} reads {ref}, which is not defined before it")
        for j, ref in enumerate(self.output_map):
            if not self._defined(ref, len(self.gates)):
                raise ValueError(f"output {j} reads undefined wire {ref}")
        return self

    def _defined(self, ref: WireRef, before: int) -> bool:
        if ref.kind == "in":
            return ref.index < self.inputs
        return ref.index < before

    @property
    def gate_count(self) -> int:
        return len(self.gates)
