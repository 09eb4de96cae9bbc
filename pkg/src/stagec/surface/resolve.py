"""Scope checking: identifiers to de Bruijn indices, defs and builtins.

An identifier means the innermost binder of that name, else an earlier
def, else a catalogue builtin.
"""

from __future__ import annotations

from typing import AbstractSet, Tuple

from stagec.kernel.builtins import CATALOGUE
from stagec.surface.syntax import (
    Program,
    SAnnot,
    SApp,
    SBound,
    SBuiltin,
    SDef,
    SExpr,
    SFst,
    SGlobal,
    SIf,
    SIter,
    SLam,
    SName,
    SPair,
    SPar,
    SQuote,
    SSeq,
    SSnd,
    SSplice,
    SSucc,
)
from stagec.util.errors import ElaborationError, UnboundIdentifier

Scope = Tuple[str, ...]


def resolve_name(e: SName, scope: Scope, defs: AbstractSet[str]) -> SExpr:
    pos = {"line": e.line, "column": e.column}
    for index, bound in enumerate(reversed(scope)):
        if bound == e.name:
            return SBound(name=e.name, index=index, **pos)
    if e.name in defs:
        return SGlobal(name=e.name, **pos)
    if e.name in CATALOGUE:
        return SBuiltin(name=e.name, **pos)
    raise UnboundIdentifier(f"unbound identifier '{e.name}'", e.line, e.column)


def resolve_expr(e: SExpr, scope: Scope = (), defs: AbstractSet[str] = frozenset()) -> SExpr:
    """Replace every SName below `e`; other nodes are rebuilt unchanged."""

    def go(child: SExpr) -> SExpr:
        return resolve_expr(child, scope, defs)

    match e:
        case SName():
            return resolve_name(e, scope, defs)
        case SLam(name=name, body=body):
            return e.model_copy(update={"body": resolve_expr(body, scope + (name,), defs)})
        case SApp(fun=f, arg=a):
            return e.model_copy(update={"fun": go(f), "arg": go(a)})
        case SQuote(inner=i) | SSplice(inner=i) | SSucc(inner=i) | SFst(inner=i) | SSnd(inner=i):
            return e.model_copy(update={"inner": go(i)})
        case SIter(n=n, z=z, s=s):
            return e.model_copy(update={"n": go(n), "z": go(z), "s": go(s)})
        case SIf(cond=c, then=a, orelse=b):
            return e.model_copy(update={"cond": go(c), "then": go(a), "orelse": go(b)})
        case SPair(left=l, right=r) | SPar(left=l, right=r) | SSeq(left=l, right=r):
            return e.model_copy(update={"left": go(l), "right": go(r)})
        case SAnnot(expr=inner):
            return e.model_copy(update={"expr": go(inner)})
    return e


def resolve(program: Program) -> Program:
    """Resolve every def; a def only sees the defs above it."""
    seen: set[str] = set()
    out: list[SDef] = []
    for d in program.defs:
        if d.name in seen:
            raise ElaborationError(f"duplicate definition of '{d.name}'", d.line, d.column)
        out.append(d.model_copy(update={"body": resolve_expr(d.body, (), frozenset(seen))}))
        seen.add(d.name)
    return Program(defs=tuple(out))
