"""Order-preserving embeddings and the weakening they induce.

An OPE from Γ to Δ is stored as the list of keep/drop flags over Δ
(innermost last): a kept position is the image of a Γ variable, a dropped
one has no pre-image. Both contexts are stored so compositions can be
checked for shape.
"""

from __future__ import annotations

from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from stagec.models.terms import Lam, Term, Var, children
from stagec.models.types import Arrow, Ctx, Ty
from stagec.util.errors import ShapeMismatch


class OPE(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    source: Ctx
    target: Ctx
    keeps: Tuple[bool, ...]

    @model_validator(mode="after")
    def _order_preserving(self):
        if len(self.keeps) != len(self.target):
            raise ValueError("one keep/drop flag per target position")
        kept = tuple(ty for ty, k in zip(self.target, self.keeps) if k)
        if kept != self.source:
            raise ValueError("kept target positions must spell out the source context")
        return self


def done() -> OPE:
    return OPE(source=(), target=(), keeps=())


def keep(sigma: OPE, ty: Ty) -> OPE:
    return OPE(source=sigma.source + (ty,), target=sigma.target + (ty,), keeps=sigma.keeps + (True,))


def drop(sigma: OPE, ty: Ty) -> OPE:
    return OPE(source=sigma.source, target=sigma.target + (ty,), keeps=sigma.keeps + (False,))


def oid(ctx: Ctx) -> OPE:
    return OPE(source=ctx, target=ctx, keeps=(True,) * len(ctx))


def weaken_closed(ctx: Ctx) -> OPE:
    """The embedding of the empty context into `ctx`."""
    return OPE(source=(), target=ctx, keeps=(False,) * len(ctx))


def ocomp(sigma: OPE, tau: OPE) -> OPE:
    """Diagrammatic composite: first `sigma` (Γ→Δ), then `tau` (Δ→Θ)."""
    if sigma.target != tau.source:
        raise ShapeMismatch(
            f"cannot compose: first embedding targets {len(sigma.target)} "
            f"variables, second starts from {len(tau.source)}"
        )
    inner = iter(sigma.keeps)
    keeps = tuple(next(inner) if k else False for k in tau.keeps)
    return OPE(source=sigma.source, target=tau.target, keeps=keeps)


def wk_var(sigma: OPE, index: int) -> int:
    """Image of de Bruijn `index` along `sigma`."""
    remaining = index
    for out, kept in enumerate(reversed(sigma.keeps)):
        if kept:
            if remaining == 0:
                return out
            remaining -= 1
    raise ShapeMismatch(f"variable {index} is not in the source of the embedding")


def wk_term(sigma: OPE, t: Term) -> Term:
    """Transport `t` from sigma's source to its target."""
    match t:
        case Var(index=i):
            return t.model_copy(update={"index": wk_var(sigma, i)})
        case Lam(body=b):
            if not isinstance(t.ty, Arrow):
                raise ShapeMismatch("a function node without an arrow type")
            return t.model_copy(update={"body": wk_term(keep(sigma, t.ty.dom), b)})
    kids = children(t)
    if not kids:
        return t
    return t.model_copy(update={name: wk_term(sigma, child) for name, child in kids})
