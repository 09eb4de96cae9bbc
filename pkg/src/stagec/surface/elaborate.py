"""Bidirectional elaboration of resolved surface programs into kernel terms.

Three modes:
  check   - the expected type is known;
  synth   - the type is computed from the expression;
  inputs  - a circuit whose input count is known, outputs computed.
Lambdas, `zero` and `mix` cannot synthesise and need a checking position
or an ascription.
"""

from __future__ import annotations

from typing import Dict, List, Literal, Optional, Type

from pydantic import BaseModel, ConfigDict

from stagec.kernel.builtins import closed_in, builtin, numeral
from stagec.kernel.validate import validate
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
    iter_nodes,
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
    Ty,
    arrow,
    base,
    boolean,
    circ,
    lift,
    nat,
    prod,
    sub_types,
)
from stagec.surface.resolve import resolve
from stagec.surface.syntax import (
    Program,
    SAnnot,
    SApp,
    SBound,
    SBuiltin,
    SExpr,
    SFalse,
    SFst,
    SGlobal,
    SIf,
    SIter,
    SLam,
    SLit,
    SMix,
    SNand,
    SNode,
    SPair,
    SPar,
    SQuote,
    SSeq,
    SSnd,
    SSplice,
    SSucc,
    STrue,
    STyArrow,
    STyBase,
    STyBool,
    STyCirc,
    STyProd,
    STyUp,
    SType,
    SZero,
)
from stagec.util.errors import (
    AnnotationRequired,
    BuiltinUnavailable,
    ElaborationError,
    InvariantFailure,
    StageError,
    TypeMismatch,
)

Profile = Literal["full", "circuit"]


class ElaboratedDef(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    ty: Ty
    term: Term


def _show(ty: Ty) -> str:
    from stagec.kernel.pretty import pretty_type

    return pretty_type(ty)


def _fail(cls: Type[ElaborationError], e: SNode, message: str) -> ElaborationError:
    return cls(message, e.line, e.column)


class Elaborator:
    """Elaborates the defs of one program, in order."""

    def __init__(self, phase: Phase = "src", profile: Profile = "full") -> None:
        self.phase = phase
        self.profile = profile
        self._defs: Dict[str, ElaboratedDef] = {}

    # --- types ---

    def to_ty(self, sty: SType) -> Ty:
        match sty:
            case STyBase(name=name, mark=mark):
                stage = "sta" if mark == "s" else "dyn"
                self._static_allowed(sty, stage == "sta", f"{name}@s")
                make = nat if name == "Nat" else base
                return make(self.phase, stage)
            case STyBool():
                self._static_allowed(sty, True, "Bool")
                return boolean()
            case STyUp(inner=i):
                self._static_allowed(sty, True, "Up")
                inner = self.to_ty(i)
                if inner.indices != ("src", "dyn"):
                    raise _fail(StageError, sty, f"only dynamic types can be lifted, not {_show(inner)}")
                return lift(inner)
            case STyCirc(inputs=i, outputs=o):
                return circ(i, o, self.phase)
            case STyArrow(dom=d, cod=c):
                dom, cod = self.to_ty(d), self.to_ty(c)
                if dom.indices != cod.indices:
                    raise _fail(StageError, sty, f"arrow from {_show(dom)} to {_show(cod)} mixes stages")
                return arrow(dom, cod)
            case STyProd(left=l, right=r):
                left, right = self.to_ty(l), self.to_ty(r)
                if left.stage != "sta" or right.stage != "sta":
                    raise _fail(StageError, sty, "pair types only hold static components")
                return prod(left, right)
        raise TypeError(f"Unexpected surface type: {sty!r}")

    def _static_allowed(self, e: SNode, is_static: bool, what: str) -> None:
        if is_static and self.phase == "stg":
            raise _fail(StageError, e, f"{what} is static and does not exist after staging")

    # --- program ---

    def elaborate_program(self, program: Program) -> List[ElaboratedDef]:
        out = []
        for d in resolve(program).defs:
            ty = self.to_ty(d.ty)
            term = self.check(d.body, ty, ())
            if self.profile == "circuit":
                self._circuit_profile(d, ty, term)
            v = validate(term, ty.phase, ty.stage, ty)
            if v is not None:
                raise InvariantFailure(f"elaborated def '{d.name}' does not validate: {v.render()}")
            result = ElaboratedDef(name=d.name, ty=ty, term=term)
            self._defs[d.name] = result
            out.append(result)
        return out

    def _circuit_profile(self, d: SNode, ty: Ty, term: Term) -> None:
        for node_ty in [ty] + [n.ty for n in iter_nodes(term)]:
            for sub in sub_types(node_ty):
                if sub.stage == "dyn" and not isinstance(sub, Circ):
                    raise _fail(
                        StageError, d,
                        f"the circuit profile only allows circuits at the dynamic stage, found {_show(sub)}",
                    )

    # --- checking ---

    def check(self, e: SExpr, want: Ty, ctx: Ctx) -> Term:
        match e:
            case SLam(body=b):
                if not isinstance(want, Arrow):
                    raise _fail(TypeMismatch, e, f"a function cannot have type {_show(want)}")
                return Lam(ty=want, body=self.check(b, want.cod, ctx + (want.dom,)))
            case SIf(cond=c, then=a, orelse=b):
                self._static_position(e, want, "if")
                return If(
                    ty=want,
                    cond=self.check(c, boolean(), ctx),
                    then=self.check(a, want, ctx),
                    orelse=self.check(b, want, ctx),
                )
            case SPair(left=l, right=r):
                self._static_position(e, want, "a pair")
                if not isinstance(want, Prod):
                    raise _fail(TypeMismatch, e, f"a pair cannot have type {_show(want)}")
                return Pair(ty=want, left=self.check(l, want.left, ctx), right=self.check(r, want.right, ctx))
            case SQuote(inner=i):
                self._static_position(e, want, "a quote")
                if not isinstance(want, Lift):
                    raise _fail(TypeMismatch, e, f"a quote has a lifted type, not {_show(want)}")
                return Quote(ty=want, inner=self.check(i, want.inner, ctx))
            case SSplice(inner=i):
                if want.indices != ("src", "dyn"):
                    raise _fail(StageError, e, f"a splice needs a dynamic source position, not {_show(want)}")
                return Splice(ty=want, inner=self.check(i, lift(want), ctx))
            case SZero():
                if not isinstance(want, Nat):
                    raise _fail(TypeMismatch, e, f"zero is a natural, not {_show(want)}")
                return Zero(ty=want)
            case SSucc(inner=i):
                if not isinstance(want, Nat):
                    raise _fail(TypeMismatch, e, f"succ builds a natural, not {_show(want)}")
                return Succ(ty=want, inner=self.check(i, want, ctx))
            case SIter(n=n, z=z, s=s):
                return Iter(
                    ty=want,
                    n=self.check(n, nat(want.phase, want.stage), ctx),
                    z=self.check(z, want, ctx),
                    s=self.check(s, arrow(want, want), ctx),
                )
            case STrue() | SFalse():
                self._static_position(e, want, "a boolean")
                if not isinstance(want, Bool):
                    raise _fail(TypeMismatch, e, f"a boolean cannot have type {_show(want)}")
                return TrueLit(ty=want) if isinstance(e, STrue) else FalseLit(ty=want)
            case SNand() | SMix() | SPar() | SSeq():
                return self._check_circuit(e, want, ctx)
            case SBuiltin(name=name):
                try:
                    t = builtin(name, want.phase, want.stage)
                except BuiltinUnavailable:
                    t = self._builtin(e)
                return self._expect(e, closed_in(t, ctx), want)
        return self._expect(e, self.synth(e, ctx), want)

    def _static_position(self, e: SNode, want: Ty, what: str) -> None:
        if want.stage != "sta":
            raise _fail(StageError, e, f"{what} is a static construct in a dynamic position")

    def _check_circuit(self, e: SExpr, want: Ty, ctx: Ctx) -> Term:
        if not isinstance(want, Circ):
            if want.stage == "sta":
                raise _fail(StageError, e, "circuits are dynamic constructs in a static position")
            raise _fail(TypeMismatch, e, f"a circuit cannot have type {_show(want)}")
        match e:
            case SNand():
                if (want.inputs, want.outputs) != (2, 1):
                    raise _fail(TypeMismatch, e, f"nand has type Circ 2 1, not {_show(want)}")
                return Nand(ty=want)
            case SMix(wires=ws):
                if len(ws) != want.outputs:
                    raise _fail(TypeMismatch, e, f"mix lists {len(ws)} wires for {want.outputs} outputs")
                if any(w >= want.inputs for w in ws):
                    raise _fail(TypeMismatch, e, f"mix reads an input beyond the {want.inputs} available")
                return Mix(ty=want, wires=ws)
            case SPar(left=l, right=r):
                left = self._synth_circuit(l, ctx)
                lt = left.ty
                if lt.inputs > want.inputs or lt.outputs > want.outputs:
                    raise _fail(TypeMismatch, e, f"left component {_show(lt)} does not fit in {_show(want)}")
                rest = circ(want.inputs - lt.inputs, want.outputs - lt.outputs, want.phase)
                return Par(ty=want, left=left, right=self.check(r, rest, ctx))
            case SSeq(left=l, right=r):
                left = self.inputs(l, want.inputs, ctx)
                mid = circ(left.ty.outputs, want.outputs, want.phase)
                return Seq(ty=want, left=left, right=self.check(r, mid, ctx))
        raise TypeError(f"Unexpected circuit expression: {e!r}")

    def _expect(self, e: SExpr, t: Term, want: Ty) -> Term:
        if t.ty == want:
            return t
        if t.ty.indices != want.indices:
            raise _fail(
                StageError, e,
                f"expression of type {_show(t.ty)} ({t.ty.phase}/{t.ty.stage}) used at "
                f"{_show(want)} ({want.phase}/{want.stage})",
            )
        raise _fail(TypeMismatch, e, f"expected {_show(want)}, got {_show(t.ty)}")

    # --- synthesis ---

    def synth(self, e: SExpr, ctx: Ctx) -> Term:
        match e:
            case SBound(index=i):
                return Var(ty=ctx[-1 - i], index=i)
            case SGlobal(name=name):
                return closed_in(self._defs[name].term, ctx)
            case SBuiltin():
                return closed_in(self._builtin(e), ctx)
            case SAnnot(expr=inner, ty=sty):
                return self.check(inner, self.to_ty(sty), ctx)
            case SApp(fun=f, arg=a):
                fun = self.synth(f, ctx)
                if not isinstance(fun.ty, Arrow):
                    raise _fail(TypeMismatch, f, f"cannot apply an expression of type {_show(fun.ty)}")
                return App(ty=fun.ty.cod, fun=fun, arg=self.check(a, fun.ty.dom, ctx))
            case SLit(value=v, mark=mark):
                self._static_allowed(e, mark == "s", f"{v}@s")
                return numeral(v, self.phase, "sta" if mark == "s" else "dyn")
            case SSucc(inner=i):
                inner = self.synth(i, ctx)
                if not isinstance(inner.ty, Nat):
                    raise _fail(TypeMismatch, e, f"succ of a {_show(inner.ty)}")
                return Succ(ty=inner.ty, inner=inner)
            case SIter(n=n, z=z, s=s):
                start = self.synth(z, ctx)
                ty = start.ty
                return Iter(
                    ty=ty,
                    n=self.check(n, nat(ty.phase, ty.stage), ctx),
                    z=start,
                    s=self.check(s, arrow(ty, ty), ctx),
                )
            case SFst(inner=i) | SSnd(inner=i):
                inner = self.synth(i, ctx)
                if not isinstance(inner.ty, Prod):
                    raise _fail(TypeMismatch, e, f"projection out of a {_show(inner.ty)}")
                if isinstance(e, SFst):
                    return Fst(ty=inner.ty.left, inner=inner)
                return Snd(ty=inner.ty.right, inner=inner)
            case SSplice(inner=i):
                self._source_only(e, "a splice")
                inner = self.synth(i, ctx)
                if not isinstance(inner.ty, Lift):
                    cls = StageError if inner.ty.stage == "dyn" else TypeMismatch
                    raise _fail(cls, e, f"only lifted code can be spliced, not {_show(inner.ty)}")
                return Splice(ty=inner.ty.inner, inner=inner)
            case SQuote(inner=i):
                self._source_only(e, "a quote")
                inner = self.synth(i, ctx)
                if inner.ty.indices != ("src", "dyn"):
                    raise _fail(StageError, e, f"only dynamic code can be quoted, not {_show(inner.ty)}")
                return Quote(ty=lift(inner.ty), inner=inner)
            case STrue() | SFalse():
                self._static_allowed(e, True, "a boolean")
                return TrueLit(ty=boolean()) if isinstance(e, STrue) else FalseLit(ty=boolean())
            case SIf(cond=c, then=a, orelse=b):
                cond = self.check(c, boolean(), ctx)
                then = self.synth(a, ctx)
                self._static_position(e, then.ty, "if")
                return If(ty=then.ty, cond=cond, then=then, orelse=self.check(b, then.ty, ctx))
            case SPair(left=l, right=r):
                left, right = self.synth(l, ctx), self.synth(r, ctx)
                if left.ty.stage != "sta" or right.ty.stage != "sta":
                    raise _fail(StageError, e, "a pair is a static construct holding dynamic values")
                return Pair(ty=prod(left.ty, right.ty), left=left, right=right)
            case SNand():
                return Nand(ty=circ(2, 1, self.phase))
            case SPar(left=l, right=r):
                left, right = self._synth_circuit(l, ctx), self._synth_circuit(r, ctx)
                lt, rt = left.ty, right.ty
                ty = circ(lt.inputs + rt.inputs, lt.outputs + rt.outputs, lt.phase)
                return Par(ty=ty, left=left, right=right)
            case SSeq(left=l, right=r):
                left = self._synth_circuit(l, ctx)
                right = self.inputs(r, left.ty.outputs, ctx)
                return Seq(ty=circ(left.ty.inputs, right.ty.outputs, left.ty.phase), left=left, right=right)
            case SLam():
                raise _fail(AnnotationRequired, e, "cannot infer the type of a lambda; add an ascription")
            case SZero():
                raise _fail(AnnotationRequired, e, "cannot infer the stage of zero; use 0@s or 0@d")
            case SMix():
                raise _fail(AnnotationRequired, e, "cannot infer the input count of mix; add an ascription")
        raise TypeError(f"Unexpected surface expression: {e!r}")

    def inputs(self, e: SExpr, count: int, ctx: Ctx) -> Term:
        """Elaborate a circuit known to take `count` inputs."""
        match e:
            case SMix(wires=ws):
                return self.check(e, circ(count, len(ws), self.phase), ctx)
            case SSeq(left=l, right=r):
                left = self.inputs(l, count, ctx)
                right = self.inputs(r, left.ty.outputs, ctx)
                return Seq(ty=circ(count, right.ty.outputs, self.phase), left=left, right=right)
            case SPar(left=l, right=r):
                left = self._synth_circuit(l, ctx)
                if left.ty.inputs > count:
                    raise _fail(TypeMismatch, e, f"left component takes {left.ty.inputs} of only {count} inputs")
                right = self.inputs(r, count - left.ty.inputs, ctx)
                ty = circ(count, left.ty.outputs + right.ty.outputs, self.phase)
                return Par(ty=ty, left=left, right=right)
        t = self._synth_circuit(e, ctx)
        if t.ty.inputs != count:
            raise _fail(TypeMismatch, e, f"circuit takes {t.ty.inputs} inputs, {count} are wired to it")
        return t

    def _synth_circuit(self, e: SExpr, ctx: Ctx) -> Term:
        t = self.synth(e, ctx)
        if not isinstance(t.ty, Circ):
            cls = StageError if t.ty.stage == "sta" else TypeMismatch
            raise _fail(cls, e, f"expected a circuit, got {_show(t.ty)}")
        return t

    def _source_only(self, e: SNode, what: str) -> None:
        if self.phase != "src":
            raise _fail(StageError, e, f"{what} does not exist after staging")

    def _builtin(self, e: SBuiltin) -> Term:
        try:
            return builtin(e.name, phase=self.phase)
        except BuiltinUnavailable as exc:
            raise _fail(StageError, e, str(exc)) from exc


def elaborate(
    program: Program, phase: Phase = "src", profile: Profile = "full"
) -> List[ElaboratedDef]:
    """Resolve and elaborate every def of `program`; each output validates."""
    return Elaborator(phase=phase, profile=profile).elaborate_program(program)


def find_def(defs: List[ElaboratedDef], name: str) -> Optional[ElaboratedDef]:
    for d in defs:
        if d.name == name:
            return d
    return None
