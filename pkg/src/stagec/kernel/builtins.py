"""Numerals, composition and the library of standard terms.

Every catalogue entry is closed; use `wk_term(weaken_closed(ctx), t)` to
move one under binders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from stagec.kernel.construct import (
    app,
    false,
    fst,
    iterate_term,
    lam,
    mix,
    nand,
    pair,
    par,
    quote,
    seq,
    snd,
    splice,
    succ,
    true,
    var,
    zero,
)
from stagec.kernel.ope import drop, oid, weaken_closed, wk_term
from stagec.models.terms import Succ, Term, Zero
from stagec.models.types import (
    EMPTY,
    Arrow,
    Ctx,
    Phase,
    Stage,
    Ty,
    arrow,
    base,
    boolean,
    circ,
    lift,
    nat,
    prod,
)
from stagec.util.errors import BuiltinUnavailable, UnknownBuiltin


def numeral(n: int, phase: Phase = "src", stage: Stage = "dyn") -> Term:
    """n nested `succ` around `zero`."""
    t: Term = zero(phase, stage)
    for _ in range(n):
        t = succ(t)
    return t


def numeral_value(t: Term) -> Optional[int]:
    """The n with t == numeral(n) at t's indices, or None."""
    n = 0
    while isinstance(t, Succ):
        t = t.inner
        n += 1
    return n if isinstance(t, Zero) else None


def compose(g: Term, f: Term, ctx: Ctx = EMPTY) -> Term:
    """λx. g (f x), with g and f weakened past the new binder."""
    if not isinstance(f.ty, Arrow):
        raise TypeError("compose expects functions")
    dom = f.ty.dom
    up = drop(oid(ctx), dom)
    return lam(dom, app(wk_term(up, g), app(wk_term(up, f), var(0, dom))))


def closed_in(t: Term, ctx: Ctx) -> Term:
    """Move a closed term under the binders of `ctx`."""
    return wk_term(weaken_closed(ctx), t)


# --- identity functions ---


def id_dyn(ty: Optional[Ty] = None) -> Term:
    ty = ty if ty is not None else base("src", "dyn")
    return lam(ty, var(0, ty))


def id_sta(ty: Optional[Ty] = None) -> Term:
    ty = ty if ty is not None else base("src", "sta")
    return lam(ty, var(0, ty))


# --- naturals and pairs ---


def add(phase: Phase = "src", stage: Stage = "sta") -> Term:
    """λm. λn. iter m n (λk. succ k)."""
    n_ty = nat(phase, stage)
    step = lam(n_ty, succ(var(0, n_ty)))
    return lam(n_ty, lam(n_ty, iterate_term(var(1, n_ty), var(0, n_ty), closed_in(step, (n_ty, n_ty)))))


def reify() -> Term:
    """Static naturals to dynamic code: λn. iter n ⟨zero⟩ (λr. ⟨succ ~r⟩)."""
    n_ty = nat("src", "sta")
    code = lift(nat("src", "dyn"))
    step = lam(code, quote(succ(splice(var(0, code)))))
    return lam(n_ty, iterate_term(var(0, n_ty), quote(zero("src", "dyn")), closed_in(step, (n_ty,))))


def fib() -> Term:
    """Linear Fibonacci over static pairs: fst ∘ (λn. iter n (0, 1) step)."""
    n_ty = nat("src", "sta")
    p_ty = prod(n_ty, n_ty)
    p = var(0, p_ty)
    plus = closed_in(add("src", "sta"), (p_ty,))
    step = lam(p_ty, pair(snd(p), app(app(plus, fst(p)), snd(p))))
    start = pair(numeral(0, "src", "sta"), numeral(1, "src", "sta"))
    loop = lam(n_ty, iterate_term(var(0, n_ty), start, closed_in(step, (n_ty,))))
    first = lam(p_ty, fst(p))
    return compose(first, loop)


# --- circuits ---


def id2(phase: Phase = "src") -> Term:
    return mix([0, 1], 2, phase)


def swap(phase: Phase = "src") -> Term:
    return mix([1, 0], 2, phase)


def dup(phase: Phase = "src") -> Term:
    return mix([0, 0], 1, phase)


def diag() -> Term:
    """λc. ⟨seq dup ~c⟩: feed one input to both ports of a 2-1 circuit."""
    c_ty = lift(circ(2, 1))
    return lam(c_ty, quote(seq(dup(), splice(var(0, c_ty)))))


def not_() -> Term:
    return splice(app(diag(), quote(nand())))


def and_() -> Term:
    return seq(nand(), not_())


def or_() -> Term:
    return seq(par(not_(), not_()), nand())


def tab() -> Term:
    """Tabulate a Bool-indexed family of 1-1 circuits into a 2-1 circuit.

    Input 0 selects, input 1 is the data: r = (b ∧ f1 x) ∨ (¬b ∧ f0 x).
    """
    f_ty = arrow(boolean(), lift(circ(1, 1)))
    f = var(0, f_ty)
    ctx = (f_ty,)
    spread = mix([0, 1, 0, 1], 2)
    branches = par(
        par(mix([0], 1), splice(app(f, true()))),
        par(closed_in(not_(), ctx), splice(app(f, false()))),
    )
    merge = seq(par(closed_in(and_(), ctx), closed_in(and_(), ctx)), closed_in(or_(), ctx))
    return lam(f_ty, quote(seq(spread, seq(branches, merge))))


# --- catalogue ---

Variant = Tuple[Phase, Stage]


@dataclass(frozen=True)
class Builtin:
    name: str
    summary: str
    make: Callable[[Phase, Stage], Term]
    variants: Tuple[Variant, ...]

    @property
    def default(self) -> Variant:
        return self.variants[0]


_ANY_DYN: Tuple[Variant, ...] = (("src", "dyn"), ("stg", "dyn"))

CATALOGUE: Dict[str, Builtin] = {
    b.name: b
    for b in (
        Builtin("idDyn", "dynamic identity on Base", lambda ph, st: id_dyn(base(ph, st)), _ANY_DYN),
        Builtin("idSta", "static identity on Base", lambda ph, st: id_sta(base(ph, st)), (("src", "sta"),)),
        Builtin("add", "addition as iterated succ", add, (("src", "sta"), ("src", "dyn"), ("stg", "dyn"))),
        Builtin("reify", "static natural to dynamic numeral", lambda ph, st: reify(), (("src", "sta"),)),
        Builtin("fib", "linear Fibonacci over static pairs", lambda ph, st: fib(), (("src", "sta"),)),
        Builtin("id2", "identity wiring on two inputs", lambda ph, st: id2(ph), _ANY_DYN),
        Builtin("swap", "exchange two inputs", lambda ph, st: swap(ph), _ANY_DYN),
        Builtin("dup", "duplicate one input", lambda ph, st: dup(ph), _ANY_DYN),
        Builtin("diag", "feed one input to both ports", lambda ph, st: diag(), (("src", "sta"),)),
        Builtin("not", "diagonal of nand", lambda ph, st: not_(), (("src", "dyn"),)),
        Builtin("and", "nand followed by not", lambda ph, st: and_(), (("src", "dyn"),)),
        Builtin("or", "nand of negated inputs", lambda ph, st: or_(), (("src", "dyn"),)),
        Builtin("tab", "tabulate a Bool-indexed circuit family", lambda ph, st: tab(), (("src", "sta"),)),
    )
}


def builtin(name: str, phase: Optional[Phase] = None, stage: Optional[Stage] = None) -> Term:
    """Catalogue lookup: the first variant matching the given indices."""
    entry = CATALOGUE.get(name)
    if entry is None:
        raise UnknownBuiltin(f"unknown builtin '{name}'")
    for ph, st in entry.variants:
        if phase in (None, ph) and stage in (None, st):
            return entry.make(ph, st)
    raise BuiltinUnavailable(
        f"builtin '{name}' is not available at {phase or '*'}/{stage or '*'}"
    )
