"""Well-scoped de Bruijn terms of the unified two-level language.

Each node stores its type `ty`; because types carry (phase, stage), so do
terms. The context is not stored: it is supplied by whoever traverses the
term (validation, weakening, evaluation).
"""

from __future__ import annotations

from typing import Iterator, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from stagec.models.types import Ty


class _TermNode(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    ty: Ty


class Var(_TermNode):
    """de Bruijn index: 0 is the innermost binder (`here`), k+1 is `there`."""

    index: int = Field(..., ge=0)


class App(_TermNode):
    fun: "Term"
    arg: "Term"


class Lam(_TermNode):
    body: "Term"


class Quote(_TermNode):
    inner: "Term"


class Splice(_TermNode):
    inner: "Term"


class Zero(_TermNode):
    pass


class Succ(_TermNode):
    inner: "Term"


class Iter(_TermNode):
    """Iter(n, z, s) applies the step `s` n times to `z`."""

    n: "Term"
    z: "Term"
    s: "Term"


class TrueLit(_TermNode):
    pass


class FalseLit(_TermNode):
    pass


class If(_TermNode):
    cond: "Term"
    then: "Term"
    orelse: "Term"


class Pair(_TermNode):
    left: "Term"
    right: "Term"


class Fst(_TermNode):
    inner: "Term"


class Snd(_TermNode):
    inner: "Term"


class Nand(_TermNode):
    pass


class Par(_TermNode):
    left: "Term"
    right: "Term"


class Seq(_TermNode):
    left: "Term"
    right: "Term"


class Mix(_TermNode):
    """Output j is wired to input wires[j]."""

    wires: Tuple[int, ...]


Term = Union[
    Var, App, Lam, Quote, Splice, Zero, Succ, Iter, TrueLit, FalseLit, If,
    Pair, Fst, Snd, Nand, Par, Seq, Mix,
]

for _model in (App, Lam, Quote, Splice, Succ, Iter, If, Pair, Fst, Snd, Par, Seq):
    _model.model_rebuild()

# Constructors that staging eliminates; none of them is legal at phase stg.
SRC_ONLY = (Quote, Splice, Pair, Fst, Snd, TrueLit, FalseLit, If)


def children(t: Term) -> Tuple[Tuple[str, Term], ...]:
    """Named sub-terms, in source order."""
    match t:
        case App(fun=f, arg=a):
            return (("fun", f), ("arg", a))
        case Lam(body=b):
            return (("body", b),)
        case Quote(inner=i) | Splice(inner=i) | Succ(inner=i) | Fst(inner=i) | Snd(inner=i):
            return (("inner", i),)
        case Iter(n=n, z=z, s=s):
            return (("n", n), ("z", z), ("s", s))
        case If(cond=c, then=a, orelse=b):
            return (("cond", c), ("then", a), ("orelse", b))
        case Pair(left=l, right=r) | Par(left=l, right=r) | Seq(left=l, right=r):
            return (("left", l), ("right", r))
    return ()


def iter_nodes(t: Term) -> Iterator[Term]:
    """Pre-order traversal without recursion."""
    stack = [t]
    while stack:
        cur = stack.pop()
        yield cur
        stack.extend(child for _, child in reversed(children(cur)))


def node_count(t: Term) -> int:
    return sum(1 for _ in iter_nodes(t))


def src_only_nodes(t: Term) -> list[Term]:
    return [node for node in iter_nodes(t) if isinstance(node, SRC_ONLY)]


def here(ty: Ty) -> Var:
    return Var(ty=ty, index=0)


def there(v: Var, ty: Ty) -> Var:
    """The variable `v` seen under one more binder."""
    return Var(ty=ty, index=v.index + 1)
