"""Graphviz rendering of netlists."""

from __future__ import annotations

from stagec.models.netlist import Netlist

_TEMPLATE = """digraph circuit {
  rankdir = "LR" ;
  node [fontname="Helvetica", fontsize=10] ;

  // inputs
  %s

  // gates
  %s

  // outputs
  %s

  // wires
  %s
}
"""


def emit_dot(n: Netlist) -> str:
    """DOT digraph: in0.. then g0.. then out0.., edges in gate order."""
    inputs = [f'in{i} [shape=circle, label="in{i}"] ;' for i in range(n.inputs)]
    gates = [f'g{k} [shape=box, label="NAND"] ;' for k in range(len(n.gates))]
    outputs = [f'out{j} [shape=doublecircle, label="out{j}"] ;' for j in range(n.outputs)]
    edges = []
    for k, gate in enumerate(n.gates):
        edges.append(f"{gate.a} -> g{k} ;")
        edges.append(f"{gate.b} -> g{k} ;")
    edges += [f"{ref} -> out{j} ;" for j, ref in enumerate(n.output_map)]
    sep = "\n  "
    return _TEMPLATE % (sep.join(inputs), sep.join(gates), sep.join(outputs), sep.join(edges))
