"""Worked programs: closed (src, dyn) terms ready for staging."""

from __future__ import annotations

from stagec.kernel.builtins import (
    add,
    closed_in,
    fib,
    id_dyn,
    id_sta,
    not_,
    numeral,
    reify,
    tab,
)
from stagec.kernel.construct import (
    app,
    if_,
    iterate_term,
    lam,
    mix,
    quote,
    splice,
    succ,
    var,
    zero,
)
from stagec.models.terms import Term
from stagec.models.types import arrow, base, boolean, lift, nat


def program_identity() -> Term:
    """λx. idDyn (~(idSta ⟨x⟩)) at Base: the static call reduces, the dynamic one stays."""
    b = base("src", "dyn")
    x = var(0, b)
    inner = splice(app(id_sta(lift(b)), quote(x)))
    return lam(b, app(closed_in(id_dyn(b), (b,)), inner))


def program_identity_closed() -> Term:
    """~(idSta ⟨idDyn⟩)."""
    f_ty = arrow(base("src", "dyn"), base("src", "dyn"))
    return splice(app(id_sta(lift(f_ty)), quote(id_dyn())))


def program_add(m: int = 7, n: int = 35) -> Term:
    """~(reify (add m n)) with static m and n."""
    total = app(app(add("src", "sta"), numeral(m, "src", "sta")), numeral(n, "src", "sta"))
    return splice(app(reify(), total))


def program_reify(n: int) -> Term:
    """~(reify (iter n 0 succ)): a static Church iteration turned into code."""
    n_ty = nat("src", "sta")
    counted = iterate_term(numeral(n, "src", "sta"), zero("src", "sta"), lam(n_ty, succ(var(0, n_ty))))
    return splice(app(reify(), counted))


def program_fib(n: int = 8) -> Term:
    """λx. add ~(reify (fib n)) x, with a dynamic add left for runtime."""
    d = nat("src", "dyn")
    ctx = (d,)
    computed = splice(app(reify(), app(fib(), numeral(n, "src", "sta"))))
    return lam(d, app(app(closed_in(add("src", "dyn"), ctx), computed), var(0, d)))


def program_mux() -> Term:
    """~(tab (λb. if b then ⟨not⟩ else ⟨mix [0]⟩)): b ? ¬x : x."""
    b_ty = boolean()
    chooser = lam(
        b_ty,
        if_(var(0, b_ty), quote(closed_in(not_(), (b_ty,))), quote(mix([0], 1))),
    )
    return splice(app(tab(), chooser))

