"""Determinism: same inputs must yield identical outputs across repeated calls."""

import pytest

from stagec.engine.compiler import COMMANDS, Compiler
from stagec.kernel.validate import validate_self
from stagec.models.terms import Lam, Succ, Zero
from stagec.models.types import arrow, nat

from conftest import PROGRAMS


_CIRCUIT_COMMANDS = [c for c in COMMANDS if c != "run"]


@pytest.mark.parametrize(
    "name, commands",
    [("fib", ["check", "stage"]), ("mux", _CIRCUIT_COMMANDS), ("or", _CIRCUIT_COMMANDS)],
)
def test_fresh_compilers_agree(name, commands):
    results = []
    for _ in range(5):
        compiler = Compiler(PROGRAMS / f"{name}.2lt")
        results.append([compiler.run_command(c).text for c in commands])
        results.append(compiler.stage().term.model_dump(mode="json"))

    first_text, first_term = results[0], results[1]
    for texts, term in zip(results[0::2], results[1::2]):
        assert texts == first_text, "Non-deterministic output detected"
        assert term == first_term, "Non-deterministic output detected"


def test_first_violation_is_stable():
    d = nat("src", "dyn")
    bad = Lam(ty=arrow(d, d), body=Succ(ty=d, inner=Zero(ty=nat("src", "sta"))))
    reports = {validate_self(bad).render() for _ in range(5)}
    assert len(reports) == 1
