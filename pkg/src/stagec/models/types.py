"""Object-language types indexed by phase and stage, and contexts.

Every type node carries the (phase, stage) it lives at. The validators
below are the formation rules: a type that breaks them cannot be built.
"""

from __future__ import annotations

from typing import Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

Phase = Literal["src", "stg"]
Stage = Literal["sta", "dyn"]

PHASES: Tuple[Phase, ...] = ("src", "stg")
STAGES: Tuple[Stage, ...] = ("sta", "dyn")


def stage_legal(phase: Phase, stage: Stage) -> bool:
    """The static stage only exists before staging."""
    return stage == "dyn" or phase == "src"


class _TyNode(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    phase: Phase
    stage: Stage

    @model_validator(mode="after")
    def _stage_exists_in_phase(self):
        if not stage_legal(self.phase, self.stage):
            raise ValueError("the static stage is only available in the src phase")
        return self

    @property
    def indices(self) -> Tuple[Phase, Stage]:
        return (self.phase, self.stage)


class Base(_TyNode):
    """The uninterpreted base type."""


class Nat(_TyNode):
    pass


class Bool(_TyNode):
    @model_validator(mode="after")
    def _static_only(self):
        if self.stage != "sta":
            raise ValueError("Bool only exists in the static stage")
        return self


class Arrow(_TyNode):
    dom: "Ty"
    cod: "Ty"

    @model_validator(mode="after")
    def _homogeneous(self):
        if self.dom.indices != self.indices or self.cod.indices != self.indices:
            raise ValueError(
                "function types are homogeneous: domain and codomain must "
                "live at the arrow's phase and stage"
            )
        return self


class Lift(_TyNode):
    """The static type of programs computing an `inner` at runtime."""

    inner: "Ty"

    @model_validator(mode="after")
    def _lifts_dynamic_source_type(self):
        if self.indices != ("src", "sta"):
            raise ValueError("a lifted type lives at (src, sta)")
        if self.inner.indices != ("src", "dyn"):
            raise ValueError("only (src, dyn) types can be lifted")
        return self


class Prod(_TyNode):
    left: "Ty"
    right: "Ty"

    @model_validator(mode="after")
    def _static_pair(self):
        if self.stage != "sta":
            raise ValueError("pair types only exist in the static stage")
        if self.left.indices != self.indices or self.right.indices != self.indices:
            raise ValueError("pair components must be static")
        return self


class Circ(_TyNode):
    """A circuit with `inputs` input wires and `outputs` output wires."""

    inputs: int = Field(..., ge=0)
    outputs: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _dynamic_only(self):
        if self.stage != "dyn":
            raise ValueError("circuit types only exist in the dynamic stage")
        return self


Ty = Union[Base, Nat, Bool, Arrow, Lift, Prod, Circ]

for _model in (Arrow, Lift, Prod):
    _model.model_rebuild()

# Left-nested context: the innermost binding is the last element.
Ctx = Tuple[Ty, ...]
EMPTY: Ctx = ()


def snoc(ctx: Ctx, ty: Ty) -> Ctx:
    return ctx + (ty,)


# --- smart constructors ---


def base(phase: Phase = "src", stage: Stage = "dyn") -> Base:
    return Base(phase=phase, stage=stage)


def nat(phase: Phase = "src", stage: Stage = "dyn") -> Nat:
    return Nat(phase=phase, stage=stage)


def boolean() -> Bool:
    return Bool(phase="src", stage="sta")


def arrow(dom: Ty, cod: Ty) -> Arrow:
    return Arrow(phase=dom.phase, stage=dom.stage, dom=dom, cod=cod)


def arrows(*tys: Ty) -> Ty:
    """Right-nested arrow: arrows(a, b, c) = a -> (b -> c)."""
    out = tys[-1]
    for ty in reversed(tys[:-1]):
        out = arrow(ty, out)
    return out


def lift(inner: Ty) -> Lift:
    return Lift(phase="src", stage="sta", inner=inner)


def prod(left: Ty, right: Ty) -> Prod:
    return Prod(phase="src", stage="sta", left=left, right=right)


def circ(inputs: int, outputs: int, phase: Phase = "src") -> Circ:
    return Circ(phase=phase, stage="dyn", inputs=inputs, outputs=outputs)


def as_staged(ty: Ty) -> Ty:
    """Re-index a (src, dyn) type into the staged phase.

    Structure is untouched; (src, dyn) rules out Lift, Bool, Prod and
    static arrows, so every node has a staged counterpart.
    """
    if ty.indices != ("src", "dyn"):
        raise ValueError(f"as_staged expects a (src, dyn) type, got {ty.indices}")
    if isinstance(ty, Arrow):
        return arrow(as_staged(ty.dom), as_staged(ty.cod))
    return ty.model_copy(update={"phase": "stg"})


def sub_types(ty: Ty):
    """Yield `ty` and every type nested inside it."""
    stack = [ty]
    while stack:
        cur = stack.pop()
        yield cur
        if isinstance(cur, Arrow):
            stack.extend((cur.cod, cur.dom))
        elif isinstance(cur, Lift):
            stack.append(cur.inner)
        elif isinstance(cur, Prod):
            stack.extend((cur.right, cur.left))
