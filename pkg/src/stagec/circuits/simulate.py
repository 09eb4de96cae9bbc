"""Evaluating netlists on bit vectors."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from stagec.models.netlist import Netlist, WireRef
from stagec.util.errors import ArityMismatch, TooManyInputs

Bits = Tuple[int, ...]

TABLE_INPUT_LIMIT = 20


def simulate(n: Netlist, bits: Sequence[int]) -> Bits:
    """Outputs of `n` on `bits` (1 is true)."""
    if len(bits) != n.inputs:
        raise ArityMismatch(f"circuit takes {n.inputs} inputs, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ArityMismatch("inputs must be 0 or 1")
    values: List[int] = []

    def read(ref: WireRef) -> int:
        return bits[ref.index] if ref.kind == "in" else values[ref.index]

    for gate in n.gates:
        values.append(0 if read(gate.a) and read(gate.b) else 1)
    return tuple(read(ref) for ref in n.output_map)


def row_bits(k: int, width: int) -> Bits:
    """Row `k` of a truth table; input 0 is the most significant bit."""
    return tuple((k >> (width - 1 - j)) & 1 for j in range(width))


def truth_table(n: Netlist, max_inputs: int = TABLE_INPUT_LIMIT) -> List[Tuple[Bits, Bits]]:
    """All 2^inputs rows in ascending binary order."""
    limit = min(max_inputs, TABLE_INPUT_LIMIT)
    if n.inputs > limit:
        raise TooManyInputs(f"{n.inputs} inputs exceed the table limit of {limit}")
    return [(row, simulate(n, row)) for row in (row_bits(k, n.inputs) for k in range(2**n.inputs))]


def parse_bits(text: str) -> Bits:
    if any(c not in "01" for c in text):
        raise ArityMismatch(f"'{text}' is not a bit string")
    return tuple(int(c) for c in text)


def format_bits(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def format_row(inputs: Sequence[int], outputs: Sequence[int]) -> str:
    return f"{format_bits(inputs)} -> {format_bits(outputs)}"
