"""Printing types and terms in the surface syntax.

The output re-parses. Binders are named after their depth (x, y, z, x3,
x4, ...), numerals print as literals, and an ascription `(e : T)` is
inserted wherever the elaborator could not synthesise the type itself.
"""

from __future__ import annotations

from typing import Literal, Tuple

from stagec.kernel.builtins import numeral_value
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
)
from stagec.models.types import Arrow, Base, Bool, Circ, Lift, Nat, Prod, Ty

# Elaboration mode a sub-term will be read back in. "inputs" is checking a
# circuit whose input count is known but whose output count is not.
Mode = Literal["check", "synth", "inputs"]

_EXPR, _APP, _SPLICE, _ATOM = range(4)

_NAMES = ("x", "y", "z")


def var_name(depth: int) -> str:
    return _NAMES[depth] if depth < len(_NAMES) else f"x{depth}"


def _mark(ty: Ty) -> str:
    return "s" if ty.stage == "sta" else "d"


def _wrap(text: str, level: int, prec: int) -> str:
    return f"({text})" if level < prec else text


def pretty_type(ty: Ty, prec: int = 0) -> str:
    match ty:
        case Arrow(dom=a, cod=b):
            return _wrap(f"{pretty_type(a, 1)} -> {pretty_type(b, 0)}", 0, prec)
        case Prod(left=l, right=r):
            return _wrap(f"{pretty_type(l, 1)} * {pretty_type(r, 2)}", 1, prec)
        case Lift(inner=i):
            return _wrap(f"Up {pretty_type(i, 3)}", 2, prec)
        case Base():
            return f"Base@{_mark(ty)}"
        case Nat():
            return f"Nat@{_mark(ty)}"
        case Bool():
            return "Bool"
        case Circ(inputs=i, outputs=o):
            return f"Circ {i} {o}"
    raise TypeError(f"Unexpected type: {ty!r}")


def pretty_term(t: Term, depth: int = 0, mode: Mode = "check") -> str:
    """Render `t`, read back in `mode` under `depth` binders."""
    return _term(t, depth, mode, _EXPR)


def pretty_def(name: str, ty: Ty, t: Term) -> str:
    return f"def {name} : {pretty_type(ty)} = {pretty_term(t)};"


def _term(t: Term, depth: int, mode: Mode, prec: int) -> str:
    if mode == "inputs" and not isinstance(t, (Mix, Seq, Par)):
        mode = "synth"
    if mode == "synth" and isinstance(t, (Lam, Mix)):
        return f"({_term(t, depth, 'check', _EXPR)} : {pretty_type(t.ty)})"
    n = numeral_value(t)
    if n is not None:
        return f"{n}@{_mark(t.ty)}"
    text, level = _render(t, depth, mode)
    return _wrap(text, level, prec)


def _render(t: Term, depth: int, mode: Mode) -> Tuple[str, int]:
    # Children of most nodes keep the parent's check/synth direction.
    same: Mode = "check" if mode == "check" else "synth"

    def arg(child: Term, child_mode: Mode) -> str:
        return _term(child, depth, child_mode, _SPLICE)

    match t:
        case Var(index=i):
            return (var_name(depth - 1 - i) if i < depth else f"?{i}"), _ATOM
        case Lam(body=b):
            return f"\\{var_name(depth)}. {_term(b, depth + 1, 'check', _EXPR)}", _EXPR
        case App(fun=f, arg=a):
            return f"{_term(f, depth, 'synth', _APP)} {arg(a, 'check')}", _APP
        case Quote(inner=i):
            return f"<{_term(i, depth, same, _EXPR)}>", _ATOM
        case Splice(inner=i):
            return f"~{arg(i, same)}", _SPLICE
        case Succ(inner=i):
            return f"succ {arg(i, same)}", _APP
        case Iter(n=n, z=z, s=s):
            return f"iter {arg(n, 'check')} {arg(z, same)} {arg(s, 'check')}", _APP
        case TrueLit():
            return "true", _ATOM
        case FalseLit():
            return "false", _ATOM
        case If(cond=c, then=a, orelse=b):
            return (
                f"if {_term(c, depth, 'check', _EXPR)} then {_term(a, depth, same, _EXPR)} "
                f"else {_term(b, depth, 'check', _EXPR)}"
            ), _EXPR
        case Pair(left=l, right=r):
            return f"({_term(l, depth, same, _EXPR)}, {_term(r, depth, same, _EXPR)})", _ATOM
        case Fst(inner=i):
            return f"fst {arg(i, 'synth')}", _APP
        case Snd(inner=i):
            return f"snd {arg(i, 'synth')}", _APP
        case Nand():
            return "nand", _ATOM
        case Par(left=l, right=r):
            return f"par {arg(l, 'synth')} {arg(r, mode)}", _APP
        case Seq(left=l, right=r):
            left: Mode = "synth" if mode == "synth" else "inputs"
            right: Mode = "check" if mode == "check" else "inputs"
            return f"seq {arg(l, left)} {arg(r, right)}", _APP
        case Mix(wires=ws):
            return f"mix [{','.join(str(w) for w in ws)}]", _APP
    raise TypeError(f"Unexpected term: {t!r}")
