"""Text to surface AST, using the LALR grammar in grammar.lark."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from stagec.surface.syntax import (
    Program,
    SAnnot,
    SApp,
    SDef,
    SFalse,
    SFst,
    SIf,
    SIter,
    SLam,
    SLit,
    SMix,
    SName,
    SNand,
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
    SZero,
)
from stagec.util.errors import SurfaceSyntaxError

_GRAMMAR = Path(__file__).with_name("grammar.lark")


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(
        _GRAMMAR.read_text(encoding="utf-8"),
        parser="lalr",
        propagate_positions=True,
        maybe_placeholders=True,
    )


def _at(meta) -> dict:
    return {"line": getattr(meta, "line", None), "column": getattr(meta, "column", None)}


def _tok(token: Token) -> dict:
    return {"line": token.line, "column": token.column}


@v_args(meta=True, inline=True)
class _ToSyntax(Transformer):
    def start(self, meta, *defs):
        return Program(defs=defs)

    def def_(self, meta, kw, name, ty, body):
        return SDef(name=str(name), ty=ty, body=body, **_tok(kw))

    # expressions

    def lam(self, meta, kw, name, body):
        return SLam(name=str(name), body=body, **_tok(kw))

    def if_(self, meta, kw, cond, then, orelse):
        return SIf(cond=cond, then=then, orelse=orelse, **_tok(kw))

    def apply(self, meta, fun, arg):
        return SApp(fun=fun, arg=arg, **_at(meta))

    def succ(self, meta, kw, inner):
        return SSucc(inner=inner, **_tok(kw))

    def iter(self, meta, kw, n, z, s):
        return SIter(n=n, z=z, s=s, **_tok(kw))

    def fst(self, meta, kw, inner):
        return SFst(inner=inner, **_tok(kw))

    def snd(self, meta, kw, inner):
        return SSnd(inner=inner, **_tok(kw))

    def par(self, meta, kw, left, right):
        return SPar(left=left, right=right, **_tok(kw))

    def seq(self, meta, kw, left, right):
        return SSeq(left=left, right=right, **_tok(kw))

    def mix(self, meta, kw, wires):
        return SMix(wires=tuple(wires or ()), **_tok(kw))

    def wires(self, meta, *ints):
        return [int(i) for i in ints]

    def splice(self, meta, kw, inner):
        return SSplice(inner=inner, **_tok(kw))

    def name(self, meta, tok):
        return SName(name=str(tok), **_tok(tok))

    def literal(self, meta, tok):
        value, mark = str(tok).split("@")
        return SLit(value=int(value), mark=mark, **_tok(tok))

    def zero(self, meta, tok):
        return SZero(**_tok(tok))

    def true(self, meta, tok):
        return STrue(**_tok(tok))

    def false(self, meta, tok):
        return SFalse(**_tok(tok))

    def nand(self, meta, tok):
        return SNand(**_tok(tok))

    def quote(self, meta, inner):
        return SQuote(inner=inner, **_at(meta))

    def pair(self, meta, left, right):
        return SPair(left=left, right=right, **_at(meta))

    def annot(self, meta, expr, ty):
        return SAnnot(expr=expr, ty=ty, **_at(meta))

    # types

    def ty_arrow(self, meta, dom, cod):
        return STyArrow(dom=dom, cod=cod, **_at(meta))

    def ty_prod(self, meta, left, right):
        return STyProd(left=left, right=right, **_at(meta))

    def ty_up(self, meta, kw, inner):
        return STyUp(inner=inner, **_tok(kw))

    def ty_base(self, meta, tok):
        name, mark = str(tok).split("@")
        return STyBase(name=name, mark=mark, **_tok(tok))

    def ty_bool(self, meta, tok):
        return STyBool(**_tok(tok))

    def ty_circ(self, meta, kw, inputs, outputs):
        return STyCirc(inputs=int(inputs), outputs=int(outputs), **_tok(kw))


def _describe(e: UnexpectedInput) -> str:
    if isinstance(e, UnexpectedEOF):
        return "unexpected end of input"
    if isinstance(e, UnexpectedToken):
        if e.token.type == "$END":
            return "unexpected end of input"
        return f"unexpected '{e.token}'"
    if isinstance(e, UnexpectedCharacters):
        return f"unexpected character '{e.char}'"
    return "syntax error"


def parse(text: str) -> Program:
    """Parse a whole .2lt file."""
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as e:
        raise SurfaceSyntaxError(_describe(e), getattr(e, "line", None), getattr(e, "column", None)) from e
    return _ToSyntax().transform(tree)
