"""Staging by evaluation.

`eval_term` interprets a source term in the model of engine/model.py.
Static constructs compute in Python; dynamic constructs rebuild their
staged counterpart over evaluated children. `stage` runs a closed
dynamic source term in the empty environment and checks the residue.
"""

from __future__ import annotations

from stagec.engine.model import (
    EMPTY_ENV,
    Env,
    Kripke,
    Value,
    extend,
    iterate,
    sem_app,
)
from stagec.kernel.ope import drop, oid
from stagec.kernel.validate import ensure_valid, validate
from stagec.models.terms import (
    App,
    FalseLit,
    Fst,
    If,
    Iter,
    Lam,
    Mix,
    Nand,
    Pair,
    Par,
    Quote,
    Seq,
    Snd,
    Splice,
    Succ,
    Term,
    TrueLit,
    Var,
    Zero,
    here,
    src_only_nodes,
)
from stagec.models.types import Arrow, Ty, as_staged
from stagec.util.errors import InvariantFailure, StuckEvaluation


def eval_term(t: Term, env: Env) -> Value:
    if isinstance(t, Var):
        return env.lookup(t.index)
    if t.ty.stage == "dyn":
        return _eval_dynamic(t, env)
    return _eval_static(t, env)


def body(t: Term, env: Env, binder: Ty) -> Kripke:
    """The Kripke function running `t` with its extra variable bound."""
    binding = extend(env, binder)
    return Kripke(env.tgt, lambda sigma: lambda v: eval_term(t, binding.run(sigma)(v)))


def _eval_static(t: Term, env: Env) -> Value:
    match t:
        case App(fun=f, arg=a):
            return sem_app(_expect(eval_term(f, env), Kripke, t), eval_term(a, env))
        case Lam(body=b):
            return body(b, env, _arrow(t).dom)
        case Quote(inner=i):
            return eval_term(i, env)
        case Zero():
            return 0
        case Succ(inner=i):
            return _expect(eval_term(i, env), int, t) + 1
        case Iter(n=n, z=z, s=s):
            count = _expect(eval_term(n, env), int, t)
            # z and s are evaluated in the same world, so the step needs no
            # further weakening before it is applied to the accumulator.
            step = _expect(eval_term(s, env), Kripke, t)
            return iterate(count, eval_term(z, env), lambda v: sem_app(step, v))
        case TrueLit():
            return True
        case FalseLit():
            return False
        case If(cond=c, then=a, orelse=b):
            chosen = a if _expect(eval_term(c, env), bool, t) else b
            return eval_term(chosen, env)
        case Pair(left=l, right=r):
            return (eval_term(l, env), eval_term(r, env))
        case Fst(inner=i):
            return _expect(eval_term(i, env), tuple, t)[0]
        case Snd(inner=i):
            return _expect(eval_term(i, env), tuple, t)[1]
    raise StuckEvaluation(f"no static meaning for {type(t).__name__} at {t.ty.indices}")


def _eval_dynamic(t: Term, env: Env) -> Term:
    ty = as_staged(t.ty)
    match t:
        case App(fun=f, arg=a):
            return App(ty=ty, fun=eval_term(f, env), arg=eval_term(a, env))
        case Lam(body=b):
            dom = _arrow(t).dom
            fresh_ty = as_staged(dom)
            k = body(b, env, dom)
            fresh = here(fresh_ty)
            return Lam(ty=ty, body=k.run(drop(oid(env.tgt), fresh_ty))(fresh))
        case Splice(inner=i):
            return eval_term(i, env)
        case Zero():
            return Zero(ty=ty)
        case Succ(inner=i):
            return Succ(ty=ty, inner=eval_term(i, env))
        case Iter(n=n, z=z, s=s):
            return Iter(ty=ty, n=eval_term(n, env), z=eval_term(z, env), s=eval_term(s, env))
        case Nand():
            return Nand(ty=ty)
        case Par(left=l, right=r):
            return Par(ty=ty, left=eval_term(l, env), right=eval_term(r, env))
        case Seq(left=l, right=r):
            return Seq(ty=ty, left=eval_term(l, env), right=eval_term(r, env))
        case Mix(wires=ws):
            return Mix(ty=ty, wires=ws)
    raise StuckEvaluation(f"no dynamic meaning for {type(t).__name__}")


def _arrow(t: Term) -> Arrow:
    if not isinstance(t.ty, Arrow):
        raise StuckEvaluation(f"{type(t).__name__} without an arrow type")
    return t.ty


def _expect(v: Value, kind: type, t: Term):
    if not isinstance(v, kind):
        raise StuckEvaluation(
            f"{type(t).__name__} expected a {kind.__name__} value, got {type(v).__name__}"
        )
    return v


def stage(t: Term) -> Term:
    """Evaluate away every static part of a closed (src, dyn) term.

    Raises IllTypedTerm if `t` does not validate; the residue is checked at
    (stg, dyn) and for leftover source-only nodes.
    """
    ensure_valid(t, "src", "dyn", t.ty)
    out = eval_term(t, EMPTY_ENV)
    staged_ty = as_staged(t.ty)
    v = validate(out, "stg", "dyn", staged_ty)
    if v is not None:
        raise InvariantFailure(f"staged term does not validate: {v.render()}")
    leftovers = src_only_nodes(out)
    if leftovers:
        raise InvariantFailure(f"staged term keeps a {type(leftovers[0]).__name__} node")
    return out
