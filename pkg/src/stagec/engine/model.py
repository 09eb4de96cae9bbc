"""Semantic values of the staging model.

A value at a dynamic type is a staged term over the target context. A
value at a static type is a host value: `int` for Nat, `bool` for Bool,
a staged term for `Up A`, a `Kripke` function for arrows and a Python
pair for products. Static Base has no values.

Values live at a context (a "world"); `wk_value` moves them to a larger
one along an OPE.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Tuple, TypeVar

from pydantic import BaseModel

from stagec.kernel.ope import OPE, ocomp, oid, wk_term
from stagec.models.types import EMPTY, Ctx, Ty
from stagec.util.errors import StuckEvaluation

F = TypeVar("F")

# int | bool | Term | Kripke | tuple[Value, Value]
Value = Any


@dataclass(frozen=True)
class Boxed(Generic[F]):
    """An F available at `ctx` and at every extension of it.

    `run(σ)` needs σ to start at `ctx`; the result lives at σ's target.
    """

    ctx: Ctx
    run: Callable[[OPE], F]


def extract(b: Boxed[F]) -> F:
    return b.run(oid(b.ctx))


def duplicate(b: Boxed[F]) -> Boxed[Boxed[F]]:
    return Boxed(
        b.ctx,
        lambda sigma: Boxed(sigma.target, lambda tau: b.run(ocomp(sigma, tau))),
    )


def constant_box(ctx: Ctx, value: F) -> Boxed[F]:
    return Boxed(ctx, lambda _sigma: value)


@dataclass(frozen=True)
class Kripke(Boxed[Callable[[Value], Value]]):
    """A function on values usable in every extension of its context."""


def sem_app(f: Kripke, v: Value) -> Value:
    return extract(f)(v)


def wk_kripke(sigma: OPE, f: Kripke) -> Kripke:
    return Kripke(sigma.target, lambda tau: f.run(ocomp(sigma, tau)))


def wk_value(sigma: OPE, v: Value) -> Value:
    """Transport a value along `sigma`; constants are unchanged."""
    if isinstance(v, (bool, int)):
        return v
    if isinstance(v, tuple):
        left, right = v
        return (wk_value(sigma, left), wk_value(sigma, right))
    if isinstance(v, Kripke):
        return wk_kripke(sigma, v)
    if isinstance(v, BaseModel):
        return wk_term(sigma, v)
    raise StuckEvaluation(f"cannot weaken a {type(v).__name__}")


@dataclass(frozen=True)
class Env:
    """Values for every variable of `src`, living at `tgt` (innermost last)."""

    src: Ctx
    tgt: Ctx
    values: Tuple[Value, ...]

    def lookup(self, index: int) -> Value:
        if index >= len(self.values):
            raise StuckEvaluation(f"variable {index} escapes an environment of size {len(self.values)}")
        return self.values[-1 - index]


EMPTY_ENV = Env(EMPTY, EMPTY, ())


def weaken_env(sigma: OPE, env: Env) -> Env:
    return Env(env.src, sigma.target, tuple(wk_value(sigma, v) for v in env.values))


def extend(env: Env, ty: Ty) -> Boxed[Callable[[Value], Env]]:
    """In any future world: add a value for a fresh variable of type `ty`."""

    def at(sigma: OPE) -> Callable[[Value], Env]:
        moved = weaken_env(sigma, env)
        return lambda v: Env(env.src + (ty,), sigma.target, moved.values + (v,))

    return Boxed(env.tgt, at)


def iterate(n: int, z: Value, s: Callable[[Value], Value]) -> Value:
    """s applied n times to z."""
    acc = z
    for _ in range(n):
        acc = s(acc)
    return acc
