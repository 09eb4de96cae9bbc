"""Seeded generators of well-typed types and terms for property tests.

Base is never generated: static Base is uninhabited and a closed dynamic
Base term needs a variable to exist. Circuits always have an input.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator, List, Optional, Tuple

from stagec.kernel.builtins import numeral
from stagec.kernel.construct import mix, nand, par, seq
from stagec.kernel.ope import OPE
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
    children,
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
    as_staged,
    boolean,
    circ,
    lift,
    nat,
    prod,
)

LEAF_PROBABILITY = 0.35
BOUNDARY_PROBABILITY = 0.3


class TermGen:
    """Goal-directed generation: pick a type, then build a term of it."""

    def __init__(self, seed: int, with_static: bool = True) -> None:
        self.rng = random.Random(seed)
        self.with_static = with_static

    # --- types ---

    def ty(self, stage: Stage, depth: int = 2, phase: Phase = "src") -> Ty:
        r = self.rng
        if stage == "dyn":
            options = ["nat", "circ"] + (["arrow"] if depth > 0 else [])
            pick = r.choice(options)
            if pick == "nat":
                return nat(phase, "dyn")
            if pick == "circ":
                return circ(r.randint(1, 3), r.randint(1, 3), phase)
            return arrow(self.ty("dyn", depth - 1, phase), self.ty("dyn", depth - 1, phase))
        options = ["nat", "bool", "lift"] + (["arrow", "prod"] if depth > 0 else [])
        pick = r.choice(options)
        if pick == "nat":
            return nat("src", "sta")
        if pick == "bool":
            return boolean()
        if pick == "lift":
            return lift(self.ty("dyn", depth - 1))
        if pick == "arrow":
            return arrow(self.ty("sta", depth - 1), self.ty("sta", depth - 1))
        return prod(self.ty("sta", depth - 1), self.ty("sta", depth - 1))

    def top_ty(self) -> Ty:
        return self.ty("dyn", 2)

    # --- terms ---

    def term(self, ctx: Ctx, ty: Ty, depth: int) -> Term:
        r = self.rng
        bound = [i for i, t in enumerate(reversed(ctx)) if t == ty]
        if bound and r.random() < 0.3:
            return Var(ty=ty, index=r.choice(bound))
        if depth <= 0 or r.random() < LEAF_PROBABILITY:
            return self.leaf(ctx, ty)
        return self.compound(ctx, ty, depth)

    def leaf(self, ctx: Ctx, ty: Ty) -> Term:
        r = self.rng
        bound = [i for i, t in enumerate(reversed(ctx)) if t == ty]
        if bound and r.random() < 0.5:
            return Var(ty=ty, index=r.choice(bound))
        match ty:
            case Nat():
                return numeral(r.randint(0, 2), ty.phase, ty.stage)
            case Bool():
                return TrueLit(ty=ty) if r.random() < 0.5 else FalseLit(ty=ty)
            case Lift(inner=i):
                return Quote(ty=ty, inner=self.leaf(ctx, i))
            case Arrow(dom=a, cod=b):
                return Lam(ty=ty, body=self.leaf(ctx + (a,), b))
            case Prod(left=a, right=b):
                return Pair(ty=ty, left=self.leaf(ctx, a), right=self.leaf(ctx, b))
            case Circ(inputs=i, outputs=o):
                if (i, o) == (2, 1) and r.random() < 0.5:
                    return Nand(ty=ty)
                return Mix(ty=ty, wires=tuple(r.randrange(i) for _ in range(o)))
        raise TypeError(f"cannot build a leaf of {ty!r}")

    def compound(self, ctx: Ctx, ty: Ty, depth: int) -> Term:
        r = self.rng
        d = depth - 1
        forms = ["app", "iter"]
        if ty.stage == "dyn" and self.with_static and r.random() < BOUNDARY_PROBABILITY:
            return Splice(ty=ty, inner=self.term(ctx, lift(ty), d))
        if ty.stage == "sta":
            forms += ["if", "fst", "snd"]
        match ty:
            case Arrow():
                forms += ["lam", "lam"]
            case Nat():
                forms += ["succ"]
            case Prod():
                forms += ["pair"]
            case Lift():
                if r.random() < BOUNDARY_PROBABILITY:
                    return Quote(ty=ty, inner=self.term(ctx, ty.inner, d))
            case Circ(inputs=i, outputs=o):
                forms += ["seq"] + (["par"] if i >= 2 and o >= 2 else [])
        form = r.choice(forms)
        if form == "app":
            a = self.ty(ty.stage, 1, ty.phase)
            return App(ty=ty, fun=self.term(ctx, arrow(a, ty), d), arg=self.term(ctx, a, d))
        if form == "iter":
            count = nat(ty.phase, ty.stage)
            return Iter(
                ty=ty,
                n=self.term(ctx, count, min(d, 1)),
                z=self.term(ctx, ty, d),
                s=self.term(ctx, arrow(ty, ty), d),
            )
        if form == "if":
            return If(ty=ty, cond=self.term(ctx, boolean(), d), then=self.term(ctx, ty, d), orelse=self.term(ctx, ty, d))
        if form == "fst":
            other = self.ty("sta", 1)
            return Fst(ty=ty, inner=self.term(ctx, prod(ty, other), d))
        if form == "snd":
            other = self.ty("sta", 1)
            return Snd(ty=ty, inner=self.term(ctx, prod(other, ty), d))
        if form == "lam":
            return Lam(ty=ty, body=self.term(ctx + (ty.dom,), ty.cod, d))
        if form == "succ":
            return Succ(ty=ty, inner=self.term(ctx, ty, d))
        if form == "pair":
            return Pair(ty=ty, left=self.term(ctx, ty.left, d), right=self.term(ctx, ty.right, d))
        if form == "seq":
            m = r.randint(1, 3)
            return Seq(
                ty=ty,
                left=self.term(ctx, circ(ty.inputs, m, ty.phase), d),
                right=self.term(ctx, circ(m, ty.outputs, ty.phase), d),
            )
        li, lo = r.randint(1, ty.inputs - 1), r.randint(1, ty.outputs - 1)
        return Par(
            ty=ty,
            left=self.term(ctx, circ(li, lo, ty.phase), d),
            right=self.term(ctx, circ(ty.inputs - li, ty.outputs - lo, ty.phase), d),
        )

    def closed_program(self, depth: int = 7) -> Term:
        """A closed (src, dyn) term."""
        return self.term((), self.top_ty(), depth)

    # --- circuits ---

    def circuit(self, inputs: int, outputs: int, depth: int, phase: Phase = "stg") -> Term:
        """A first-order circuit term: only nand, mix, par and seq."""
        r = self.rng
        if depth <= 0 or r.random() < LEAF_PROBABILITY:
            if (inputs, outputs) == (2, 1) and r.random() < 0.5:
                return nand(phase)
            return mix([r.randrange(inputs) for _ in range(outputs)], inputs, phase)
        if inputs >= 2 and outputs >= 2 and r.random() < 0.5:
            li, lo = r.randint(1, inputs - 1), r.randint(1, outputs - 1)
            return par(
                self.circuit(li, lo, depth - 1, phase),
                self.circuit(inputs - li, outputs - lo, depth - 1, phase),
            )
        m = r.randint(1, 4)
        return seq(self.circuit(inputs, m, depth - 1, phase), self.circuit(m, outputs, depth - 1, phase))


def restage(t: Term) -> Term:
    """Re-index every node of a purely dynamic source term into phase stg."""
    update = {name: restage(child) for name, child in children(t)}
    update["ty"] = as_staged(t.ty)
    return t.model_copy(update=update)


# --- OPE enumeration ---

ALPHABET: Tuple[Ty, ...] = (nat("src", "dyn"), nat("src", "sta"), boolean())


def contexts(max_len: int = 3) -> Iterator[Ctx]:
    for n in range(max_len + 1):
        yield from product(ALPHABET, repeat=n)


def opes_into(target: Ctx) -> Iterator[OPE]:
    """Every OPE whose target is `target`."""
    for keeps in product((True, False), repeat=len(target)):
        source = tuple(ty for ty, k in zip(target, keeps) if k)
        yield OPE(source=source, target=target, keeps=keeps)


def all_opes(max_len: int = 3) -> List[OPE]:
    return [sigma for target in contexts(max_len) for sigma in opes_into(target)]


def open_terms(ctx: Ctx, count: int, depth: int = 5, seed: int = 0) -> List[Term]:
    """Well-typed terms over `ctx` at Nat types, using its variables when possible."""
    gen = TermGen(seed)
    out = []
    for k in range(count):
        ty: Optional[Ty] = ctx[-1] if ctx and k % 2 == 0 and not isinstance(ctx[-1], Bool) else None
        if ty is None:
            ty = nat("src", "dyn") if k % 2 else nat("src", "sta")
        out.append(gen.term(ctx, ty, depth))
    return out
