"""Smart constructors: build term nodes and compute their types.

They only check what they need to compute the result type; full typing
is `validate`'s job.
"""

from __future__ import annotations

from typing import Sequence

from stagec.kernel.violations import Violation
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
)
from stagec.models.types import (
    Arrow,
    Circ,
    Lift,
    Phase,
    Prod,
    Stage,
    Ty,
    arrow,
    boolean,
    circ,
    lift,
    nat,
    prod,
)
from stagec.util.errors import IllTypedTerm


def _shape_error(node: str, message: str) -> IllTypedTerm:
    return IllTypedTerm(Violation(kind="TypeMismatch", node=node, message=message))


def var(index: int, ty: Ty) -> Var:
    return Var(ty=ty, index=index)


def app(fun: Term, arg: Term) -> App:
    if not isinstance(fun.ty, Arrow):
        raise _shape_error("App", "the function position does not have an arrow type")
    return App(ty=fun.ty.cod, fun=fun, arg=arg)


def lam(dom: Ty, body: Term) -> Lam:
    return Lam(ty=arrow(dom, body.ty), body=body)


def quote(t: Term) -> Quote:
    return Quote(ty=lift(t.ty), inner=t)


def splice(t: Term) -> Splice:
    if not isinstance(t.ty, Lift):
        raise _shape_error("Splice", "only lifted terms can be spliced")
    return Splice(ty=t.ty.inner, inner=t)


def zero(phase: Phase = "src", stage: Stage = "dyn") -> Zero:
    return Zero(ty=nat(phase, stage))


def succ(t: Term) -> Succ:
    return Succ(ty=t.ty, inner=t)


def iterate_term(n: Term, z: Term, s: Term) -> Iter:
    return Iter(ty=z.ty, n=n, z=z, s=s)


def true() -> TrueLit:
    return TrueLit(ty=boolean())


def false() -> FalseLit:
    return FalseLit(ty=boolean())


def if_(cond: Term, then: Term, orelse: Term) -> If:
    return If(ty=then.ty, cond=cond, then=then, orelse=orelse)


def pair(left: Term, right: Term) -> Pair:
    return Pair(ty=prod(left.ty, right.ty), left=left, right=right)


def fst(t: Term) -> Fst:
    if not isinstance(t.ty, Prod):
        raise _shape_error("Fst", "projection out of a non-pair")
    return Fst(ty=t.ty.left, inner=t)


def snd(t: Term) -> Snd:
    if not isinstance(t.ty, Prod):
        raise _shape_error("Snd", "projection out of a non-pair")
    return Snd(ty=t.ty.right, inner=t)


def nand(phase: Phase = "src") -> Nand:
    return Nand(ty=circ(2, 1, phase))


def _circ_of(node: str, t: Term) -> Circ:
    if not isinstance(t.ty, Circ):
        raise _shape_error(node, "component is not a circuit")
    return t.ty


def par(left: Term, right: Term) -> Par:
    lt, rt = _circ_of("Par", left), _circ_of("Par", right)
    return Par(ty=circ(lt.inputs + rt.inputs, lt.outputs + rt.outputs, lt.phase), left=left, right=right)


def seq(left: Term, right: Term) -> Seq:
    lt, rt = _circ_of("Seq", left), _circ_of("Seq", right)
    return Seq(ty=circ(lt.inputs, rt.outputs, lt.phase), left=left, right=right)


def mix(wires: Sequence[int], inputs: int, phase: Phase = "src") -> Mix:
    return Mix(ty=circ(inputs, len(wires), phase), wires=tuple(wires))
