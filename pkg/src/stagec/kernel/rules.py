"""Typing rules of the two-level language, one check per constructor.

Each rule receives a node together with the indices its position claims
and returns either a Violation or the obligations its children must meet.
Rules are pure functions; the traversal lives in validate.py.
"""

from __future__ import annotations

from typing import List, Optional, Tuple, Union

from stagec.kernel.violations import Violation, ViolationKind
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
    Bool,
    Circ,
    Ctx,
    Lift,
    Nat,
    Phase,
    Prod,
    Stage,
    Ty,
    arrow,
    lift,
    snoc,
    stage_legal,
)

# (step name, child, phase, stage, type, context)
Obligation = Tuple[str, Term, Phase, Stage, Ty, Ctx]
RuleResult = Union[Violation, List[Obligation]]

_PHASE_SRC_ONLY = (Quote, Splice)
_STATIC_ONLY = (TrueLit, FalseLit, If, Pair, Fst, Snd)
_DYNAMIC_ONLY = (Nand, Par, Seq, Mix)


def _violation(kind: ViolationKind, t: Term, message: str) -> Violation:
    return Violation(kind=kind, node=type(t).__name__, message=message)


def _show(ty: Ty) -> str:
    from stagec.kernel.pretty import pretty_type

    return f"{pretty_type(ty)} @{ty.phase}"


def check_indices(t: Term, phase: Phase, stage: Stage) -> Optional[Violation]:
    """Constructor-level phase/stage legality."""
    if not stage_legal(phase, stage):
        return _violation("StageViolation", t, "the static stage does not exist after staging")
    if isinstance(t, _PHASE_SRC_ONLY):
        if phase != "src":
            return _violation("PhaseViolation", t, "quotes and splices only exist in the src phase")
        wanted = "sta" if isinstance(t, Quote) else "dyn"
        if stage != wanted:
            return _violation("StageViolation", t, f"a {type(t).__name__.lower()} lives at stage {wanted}")
    if isinstance(t, _STATIC_ONLY) and stage != "sta":
        return _violation("StageViolation", t, "only available in the static layer")
    if isinstance(t, _DYNAMIC_ONLY) and stage != "dyn":
        return _violation("StageViolation", t, "circuits only exist in the dynamic layer")
    return None


def check_annotation(t: Term, phase: Phase, stage: Stage, ty: Ty) -> Optional[Violation]:
    """The node's stored type must be the one its position expects."""
    if t.ty != ty:
        return _violation("TypeMismatch", t, f"node has type {_show(t.ty)}, position expects {_show(ty)}")
    if ty.phase != phase:
        return _violation("PhaseViolation", t, f"type {_show(ty)} claimed at phase {phase}")
    if ty.stage != stage:
        return _violation("StageViolation", t, f"type {_show(ty)} claimed at stage {stage}")
    return None


def check_node(t: Term, phase: Phase, stage: Stage, ctx: Ctx) -> RuleResult:
    """Rule for one node whose annotation already matches its position."""
    ty = t.ty
    match t:
        case Var(index=i):
            if i >= len(ctx):
                return _violation("ScopeViolation", t, f"index {i} in a context of length {len(ctx)}")
            bound = ctx[-1 - i]
            if bound != ty:
                return _violation("TypeMismatch", t, f"variable {i} is bound at {_show(bound)}")
            return []
        case App(fun=f, arg=a):
            if not isinstance(f.ty, Arrow) or f.ty.cod != ty:
                return _violation("TypeMismatch", t, f"cannot apply {_show(f.ty)} to produce {_show(ty)}")
            return [("fun", f, phase, stage, f.ty, ctx), ("arg", a, phase, stage, f.ty.dom, ctx)]
        case Lam(body=b):
            if not isinstance(ty, Arrow):
                return _violation("TypeMismatch", t, f"a function cannot have type {_show(ty)}")
            return [("body", b, phase, stage, ty.cod, snoc(ctx, ty.dom))]
        case Quote(inner=i):
            if not isinstance(ty, Lift):
                return _violation("TypeMismatch", t, f"a quote has a lifted type, not {_show(ty)}")
            return [("inner", i, "src", "dyn", ty.inner, ctx)]
        case Splice(inner=i):
            return [("inner", i, "src", "sta", lift(ty), ctx)]
        case Zero():
            if not isinstance(ty, Nat):
                return _violation("TypeMismatch", t, f"zero is a natural, not {_show(ty)}")
            return []
        case Succ(inner=i):
            if not isinstance(ty, Nat):
                return _violation("TypeMismatch", t, f"succ builds a natural, not {_show(ty)}")
            return [("inner", i, phase, stage, ty, ctx)]
        case Iter(n=n, z=z, s=s):
            count = Nat(phase=phase, stage=stage)
            return [
                ("n", n, phase, stage, count, ctx),
                ("z", z, phase, stage, ty, ctx),
                ("s", s, phase, stage, arrow(ty, ty), ctx),
            ]
        case TrueLit() | FalseLit():
            if not isinstance(ty, Bool):
                return _violation("TypeMismatch", t, f"a boolean cannot have type {_show(ty)}")
            return []
        case If(cond=c, then=a, orelse=b):
            return [
                ("cond", c, phase, stage, Bool(phase="src", stage="sta"), ctx),
                ("then", a, phase, stage, ty, ctx),
                ("orelse", b, phase, stage, ty, ctx),
            ]
        case Pair(left=l, right=r):
            if not isinstance(ty, Prod):
                return _violation("TypeMismatch", t, f"a pair cannot have type {_show(ty)}")
            return [("left", l, phase, stage, ty.left, ctx), ("right", r, phase, stage, ty.right, ctx)]
        case Fst(inner=i) | Snd(inner=i):
            pick = "left" if isinstance(t, Fst) else "right"
            if not isinstance(i.ty, Prod) or getattr(i.ty, pick) != ty:
                return _violation("TypeMismatch", t, f"cannot project {_show(ty)} out of {_show(i.ty)}")
            return [("inner", i, phase, stage, i.ty, ctx)]
        case Nand():
            if not isinstance(ty, Circ) or (ty.inputs, ty.outputs) != (2, 1):
                return _violation("TypeMismatch", t, f"nand has type Circ 2 1, not {_show(ty)}")
            return []
        case Par(left=l, right=r):
            if not (isinstance(ty, Circ) and isinstance(l.ty, Circ) and isinstance(r.ty, Circ)):
                return _violation("TypeMismatch", t, "parallel composition needs circuit types")
            if (l.ty.inputs + r.ty.inputs, l.ty.outputs + r.ty.outputs) != (ty.inputs, ty.outputs):
                return _violation("TypeMismatch", t, "arities of the components do not add up")
            return [("left", l, phase, stage, l.ty, ctx), ("right", r, phase, stage, r.ty, ctx)]
        case Seq(left=l, right=r):
            if not (isinstance(ty, Circ) and isinstance(l.ty, Circ) and isinstance(r.ty, Circ)):
                return _violation("TypeMismatch", t, "sequential composition needs circuit types")
            if l.ty.outputs != r.ty.inputs:
                return _violation(
                    "TypeMismatch", t,
                    f"first circuit has {l.ty.outputs} outputs, second takes {r.ty.inputs} inputs",
                )
            if (l.ty.inputs, r.ty.outputs) != (ty.inputs, ty.outputs):
                return _violation("TypeMismatch", t, "composite arities do not match the node type")
            return [("left", l, phase, stage, l.ty, ctx), ("right", r, phase, stage, r.ty, ctx)]
        case Mix(wires=ws):
            if not isinstance(ty, Circ):
                return _violation("TypeMismatch", t, f"mix has a circuit type, not {_show(ty)}")
            if len(ws) != ty.outputs:
                return _violation("ArityViolation", t, f"{len(ws)} wires for {ty.outputs} outputs")
            for j, w in enumerate(ws):
                if w >= ty.inputs or w < 0:
                    return _violation("ArityViolation", t, f"wire {j} reads input {w}, only {ty.inputs} exist")
            return []
    raise TypeError(f"Unexpected term in check_node: {t!r}")
