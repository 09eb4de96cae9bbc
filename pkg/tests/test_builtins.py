"""Tests for numerals and composition in the builtin library."""

import pytest

from stagec.kernel.builtins import add, closed_in, compose, fib, id_dyn, numeral
from stagec.kernel.construct import app, fst, iterate_term, lam, pair, snd, succ, var
from stagec.kernel.validate import validate
from stagec.models.terms import App, Lam, Var
from stagec.models.types import arrow, base, nat, prod

B = base("src", "dyn")
D = nat("src", "dyn")
S = nat("src", "sta")


def test_compose_of_identities_unfolds():
    f = Lam(ty=arrow(B, B), body=Var(ty=B, index=0))
    expected = Lam(
        ty=arrow(B, B),
        body=App(ty=B, fun=f, arg=App(ty=B, fun=f, arg=Var(ty=B, index=0))),
    )
    assert compose(id_dyn(), id_dyn()) == expected


def test_composition_of_well_typed_functions_validates():
    inc = lam(D, succ(var(0, D)))
    assert validate(compose(inc, inc), "src", "dyn", arrow(D, D)) is None
    twice = lam(S, succ(succ(var(0, S))))
    assert validate(compose(twice, twice), "src", "sta", arrow(S, S)) is None


def test_compose_weakens_open_functions_past_its_binder():
    F = arrow(D, D)
    t = compose(var(0, F), var(0, F), (F,))
    assert t.body.fun == var(1, F)
    assert t.body.arg.fun == var(1, F)
    assert validate(t, "src", "dyn", F, (F,)) is None


def test_compose_needs_a_function():
    with pytest.raises(TypeError):
        compose(id_dyn(), numeral(1, "src", "dyn"))


def test_fib_is_first_after_loop():
    p_ty = prod(S, S)
    p = var(0, p_ty)
    plus = closed_in(add("src", "sta"), (p_ty,))
    step = lam(p_ty, pair(snd(p), app(app(plus, fst(p)), snd(p))))
    start = pair(numeral(0, "src", "sta"), numeral(1, "src", "sta"))
    loop = lam(S, iterate_term(var(0, S), start, closed_in(step, (S,))))
    first = lam(p_ty, fst(p))
    assert fib() == lam(S, app(first, app(loop, var(0, S))))
    assert fib() == compose(first, loop)
    assert validate(fib(), "src", "sta", arrow(S, S)) is None
