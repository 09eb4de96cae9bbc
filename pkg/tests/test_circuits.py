"""Netlists, simulation, truth tables and DOT output."""

from itertools import product

import pytest
from lark import Lark, Token

from stagec.circuits.dot import emit_dot
from stagec.circuits.netlist import dump_netlist, load_netlist, to_netlist
from stagec.circuits.simulate import (
    format_row,
    parse_bits,
    row_bits,
    simulate,
    truth_table,
)
from stagec.engine.stager import stage
from stagec.kernel.builtins import and_, dup, id2, not_, or_, swap
from stagec.kernel.construct import lam, mix, nand, par, seq, var
from stagec.kernel.programs import program_mux
from stagec.models.netlist import NandGate, Netlist, gate_ref, input_ref
from stagec.models.terms import Mix, Nand, Par, Seq, iter_nodes
from stagec.models.types import circ
from stagec.util.errors import ArityMismatch, CircuitError, NonCircuitConstruct, TooManyInputs

from termgen import TermGen


def _denote(t, bits):
    """Direct interpretation of a circuit term, independent of netlists."""
    match t:
        case Nand():
            return (0 if bits[0] and bits[1] else 1,)
        case Mix(wires=ws):
            return tuple(bits[w] for w in ws)
        case Par(left=l, right=r):
            k = l.ty.inputs
            return _denote(l, bits[:k]) + _denote(r, bits[k:])
        case Seq(left=l, right=r):
            return _denote(r, _denote(l, bits))
    raise AssertionError(type(t).__name__)


def _staged_table(term):
    return [format_row(i, o) for i, o in truth_table(to_netlist(stage(term)))]


def test_nand_netlist():
    n = to_netlist(nand("stg"))
    assert n.gates == (NandGate(a=input_ref(0), b=input_ref(1)),)
    assert n.output_map == (gate_ref(0),)
    assert [simulate(n, bits) for bits in product((0, 1), repeat=2)] == [(1,), (1,), (1,), (0,)]


def test_wiring_only_circuits_have_no_gates():
    n = to_netlist(swap("stg"))
    assert n.gate_count == 0
    assert simulate(n, (1, 0)) == (0, 1)
    assert simulate(to_netlist(dup("stg")), (1,)) == (1, 1)


@pytest.mark.parametrize(
    "term, rows",
    [
        (not_(), ["0 -> 1", "1 -> 0"]),
        (and_(), ["00 -> 0", "01 -> 0", "10 -> 0", "11 -> 1"]),
        (or_(), ["00 -> 0", "01 -> 1", "10 -> 1", "11 -> 1"]),
        (program_mux(), ["00 -> 0", "01 -> 1", "10 -> 1", "11 -> 0"]),
    ],
)
def test_gate_library_truth_tables(term, rows):
    assert _staged_table(term) == rows


def test_netlists_agree_with_direct_interpretation():
    for seed in range(200):
        gen = TermGen(seed)
        i, o = gen.rng.randint(1, 4), gen.rng.randint(1, 3)
        c = gen.circuit(i, o, depth=5)
        n = to_netlist(c)
        assert n.gate_count == sum(1 for node in iter_nodes(c) if isinstance(node, Nand))
        for bits in product((0, 1), repeat=i):
            assert simulate(n, bits) == _denote(c, bits), seed


def test_seq_and_par_compose_simulations():
    a, b = and_(), or_()
    na, nb = to_netlist(stage(a)), to_netlist(stage(b))
    both = to_netlist(stage(par(a, b)))
    chained = to_netlist(stage(seq(par(a, b), nand())))
    for bits in product((0, 1), repeat=4):
        left, right = simulate(na, bits[:2]), simulate(nb, bits[2:])
        assert simulate(both, bits) == left + right
        assert simulate(chained, bits) == (0 if left[0] and right[0] else 1,)


def test_seq_with_identity_wiring_is_neutral():
    c = stage(or_())
    wrapped = seq(mix([0, 1], 2, "stg"), seq(c, mix([0], 1, "stg")))
    assert truth_table(to_netlist(wrapped)) == truth_table(to_netlist(c))


def test_non_circuit_terms_are_rejected():
    d = circ(1, 1, "stg")
    with pytest.raises(NonCircuitConstruct):
        to_netlist(lam(d, var(0, d)))


def test_simulate_checks_inputs():
    n = to_netlist(nand("stg"))
    with pytest.raises(ArityMismatch):
        simulate(n, (1,))
    with pytest.raises(ArityMismatch):
        simulate(n, (1, 2))
    with pytest.raises(ArityMismatch):
        parse_bits("0x")


def test_rows_are_msb_first():
    assert row_bits(1, 3) == (0, 0, 1)
    assert row_bits(4, 3) == (1, 0, 0)


def test_table_input_limit():
    wide = Netlist(inputs=5, outputs=1, output_map=(input_ref(0),))
    assert len(truth_table(wide, max_inputs=5)) == 32
    with pytest.raises(TooManyInputs):
        truth_table(wide, max_inputs=4)


def test_netlist_rejects_forward_references():
    with pytest.raises(ValueError):
        Netlist(inputs=1, outputs=1, gates=(NandGate(a=gate_ref(0), b=input_ref(0)),), output_map=(gate_ref(0),))


def test_dump_and_load():
    n = to_netlist(stage(or_()))
    text = dump_netlist(n)
    assert text.splitlines()[0] == "inputs 2 outputs 1"
    assert load_netlist(text) == n
    with pytest.raises(CircuitError):
        load_netlist("inputs 1 outputs 1\nout 0 = g3\n")
    with pytest.raises(CircuitError):
        load_netlist("")


def test_dot_output():
    text = emit_dot(to_netlist(stage(not_())))
    assert text.startswith("digraph circuit {")
    assert 'in0 [shape=circle, label="in0"] ;' in text
    assert 'g0 [shape=box, label="NAND"] ;' in text
    assert "in0 -> g0 ;" in text
    assert "g0 -> out0 ;" in text
    assert text.rstrip().endswith("}")


_DOT = Lark(
    r"""
    start: "strict"? ("graph" | "digraph") id? "{" stmt* "}"
    ?stmt: (node_stmt | edge_stmt | attr_stmt | assign) ";"?
    assign: id "=" id
    attr_stmt: ("graph" | "node" | "edge") attr_list
    attr_list: ("[" (a_item (("," | ";")? a_item)*)? "]")+
    a_item: id "=" id
    edge_stmt: id (EDGEOP id)+ attr_list?
    node_stmt: id attr_list?
    ?id: CNAME | NUMBER | ESCAPED_STRING
    EDGEOP: "->" | "--"

    %import common.CNAME
    %import common.NUMBER
    %import common.ESCAPED_STRING
    %import common.WS
    %ignore WS
    %ignore /\/\/[^\n]*/
    """,
    parser="lalr",
)


def _dot_graph(text):
    tree = _DOT.parse(text)
    nodes = [str(stmt.children[0]) for stmt in tree.find_data("node_stmt")]
    edges = [
        tuple(str(tok) for tok in stmt.children if isinstance(tok, Token) and tok.type != "EDGEOP")
        for stmt in tree.find_data("edge_stmt")
    ]
    return nodes, edges


@pytest.mark.parametrize("make", [not_, and_, or_, dup, swap, id2, program_mux])
def test_dot_parses_and_declares_every_endpoint(make):
    n = to_netlist(stage(make()))
    nodes, edges = _dot_graph(emit_dot(n))
    assert len(nodes) == len(set(nodes)) == n.inputs + len(n.gates) + n.outputs
    assert len(edges) == 2 * len(n.gates) + n.outputs
    for src, dst in edges:
        assert src in nodes
        assert dst in nodes


def test_dot_of_dup():
    nodes, edges = _dot_graph(emit_dot(to_netlist(stage(dup()))))
    assert [v for v in nodes if v.startswith("in")] == ["in0"]
    assert [v for v in nodes if v.startswith("out")] == ["out0", "out1"]
    assert not [v for v in nodes if v.startswith("g")]
    assert edges == [("in0", "out0"), ("in0", "out1")]
