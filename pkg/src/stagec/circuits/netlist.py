"""Flattening staged circuit terms into netlists, and the netlist text format."""

from __future__ import annotations

import re
from typing import List, Sequence, Tuple

from pydantic import ValidationError

from stagec.kernel.validate import validate_self
from stagec.models.netlist import NandGate, Netlist, WireRef, gate_ref, input_ref
from stagec.models.terms import Mix, Nand, Par, Seq, Term
from stagec.models.types import Circ
from stagec.util.errors import CircuitError, IllTypedTerm, NonCircuitConstruct


def to_netlist(t: Term) -> Netlist:
    """Flatten a closed first-order circuit term.

    Residual dynamic λ/app/variables are rejected, not reduced.
    """
    if not isinstance(t.ty, Circ):
        raise NonCircuitConstruct(f"expected a circuit, got a {type(t.ty).__name__} term")
    v = validate_self(t)
    if v is not None:
        raise IllTypedTerm(v)
    gates: List[NandGate] = []
    ins = [input_ref(i) for i in range(t.ty.inputs)]
    outs = _flatten(t, ins, gates, ())
    return Netlist(
        inputs=t.ty.inputs,
        outputs=t.ty.outputs,
        gates=tuple(gates),
        output_map=tuple(outs),
    )


def _flatten(
    t: Term, ins: Sequence[WireRef], gates: List[NandGate], path: Tuple[str, ...]
) -> List[WireRef]:
    match t:
        case Nand():
            gates.append(NandGate(a=ins[0], b=ins[1]))
            return [gate_ref(len(gates) - 1)]
        case Par(left=l, right=r):
            split = l.ty.inputs
            return _flatten(l, ins[:split], gates, path + ("left",)) + _flatten(
                r, ins[split:], gates, path + ("right",)
            )
        case Seq(left=l, right=r):
            mid = _flatten(l, ins, gates, path + ("left",))
            return _flatten(r, mid, gates, path + ("right",))
        case Mix(wires=ws):
            return [ins[w] for w in ws]
    raise NonCircuitConstruct(f"{type(t).__name__} is not a circuit constructor", path)


def dump_netlist(n: Netlist) -> str:
    lines = [f"inputs {n.inputs} outputs {n.outputs}"]
    lines += [f"gate {k} = nand {g.a} {g.b}" for k, g in enumerate(n.gates)]
    lines += [f"out {j} = {ref}" for j, ref in enumerate(n.output_map)]
    return "\n".join(lines) + "\n"


_HEADER = re.compile(r"^inputs (\d+) outputs (\d+)$")
_GATE = re.compile(r"^gate (\d+) = nand (\S+) (\S+)$")
_OUT = re.compile(r"^out (\d+) = (\S+)$")
_REF = re.compile(r"^(in|g)(\d+)$")


def _parse_ref(text: str, lineno: int) -> WireRef:
    m = _REF.match(text)
    if m is None:
        raise CircuitError(f"line {lineno}: bad wire reference '{text}'")
    kind = "in" if m.group(1) == "in" else "gate"
    return WireRef(kind=kind, index=int(m.group(2)))


def load_netlist(text: str) -> Netlist:
    """Parse the output of `dump_netlist`; blank lines are ignored."""
    rows = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not rows:
        raise CircuitError("empty netlist")
    lineno, first = rows[0]
    header = _HEADER.match(first)
    if header is None:
        raise CircuitError(f"line {lineno}: expected 'inputs N outputs M'")
    gates: List[NandGate] = []
    outs: List[WireRef] = []
    for lineno, line in rows[1:]:
        if m := _GATE.match(line):
            if int(m.group(1)) != len(gates):
                raise CircuitError(f"line {lineno}: gates must be numbered in order")
            gates.append(NandGate(a=_parse_ref(m.group(2), lineno), b=_parse_ref(m.group(3), lineno)))
        elif m := _OUT.match(line):
            if int(m.group(1)) != len(outs):
                raise CircuitError(f"line {lineno}: outputs must be numbered in order")
            outs.append(_parse_ref(m.group(2), lineno))
        else:
            raise CircuitError(f"line {lineno}: cannot parse '{line}'")
    try:
        return Netlist(
            inputs=int(header.group(1)),
            outputs=int(header.group(2)),
            gates=tuple(gates),
            output_map=tuple(outs),
        )
    except ValidationError as e:
        raise CircuitError(f"Netlist validation failed: {e}") from e
