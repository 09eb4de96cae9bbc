"""Surface AST: named variables, stage-marked literals, positions."""

from __future__ import annotations

from typing import Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field


class SNode(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    line: Optional[int] = None
    column: Optional[int] = None


# --- types ---


class STyBase(SNode):
    name: Literal["Base", "Nat"]
    mark: Literal["s", "d"]


class STyBool(SNode):
    pass


class STyUp(SNode):
    inner: "SType"


class STyCirc(SNode):
    inputs: int = Field(..., ge=0)
    outputs: int = Field(..., ge=0)


class STyArrow(SNode):
    dom: "SType"
    cod: "SType"


class STyProd(SNode):
    left: "SType"
    right: "SType"


SType = Union[STyBase, STyBool, STyUp, STyCirc, STyArrow, STyProd]


# --- expressions ---


class SName(SNode):
    """An identifier before resolution."""

    name: str


class SBound(SNode):
    """A λ-bound variable, as a de Bruijn index."""

    name: str
    index: int = Field(..., ge=0)


class SGlobal(SNode):
    """A reference to an earlier def."""

    name: str


class SBuiltin(SNode):
    name: str


class SLit(SNode):
    value: int = Field(..., ge=0)
    mark: Literal["s", "d"]


class SZero(SNode):
    pass


class STrue(SNode):
    pass


class SFalse(SNode):
    pass


class SNand(SNode):
    pass


class SMix(SNode):
    wires: Tuple[int, ...]


class SLam(SNode):
    name: str
    body: "SExpr"


class SApp(SNode):
    fun: "SExpr"
    arg: "SExpr"


class SQuote(SNode):
    inner: "SExpr"


class SSplice(SNode):
    inner: "SExpr"


class SSucc(SNode):
    inner: "SExpr"


class SIter(SNode):
    n: "SExpr"
    z: "SExpr"
    s: "SExpr"


class SIf(SNode):
    cond: "SExpr"
    then: "SExpr"
    orelse: "SExpr"


class SPair(SNode):
    left: "SExpr"
    right: "SExpr"


class SFst(SNode):
    inner: "SExpr"


class SSnd(SNode):
    inner: "SExpr"


class SPar(SNode):
    left: "SExpr"
    right: "SExpr"


class SSeq(SNode):
    left: "SExpr"
    right: "SExpr"


class SAnnot(SNode):
    expr: "SExpr"
    ty: SType


SExpr = Union[
    SName, SBound, SGlobal, SBuiltin, SLit, SZero, STrue, SFalse, SNand, SMix,
    SLam, SApp, SQuote, SSplice, SSucc, SIter, SIf, SPair, SFst, SSnd, SPar,
    SSeq, SAnnot,
]


class SDef(SNode):
    name: str
    ty: SType
    body: SExpr


class Program(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    defs: Tuple[SDef, ...] = ()

    def find(self, name: str) -> Optional[SDef]:
        for d in self.defs:
            if d.name == name:
                return d
        return None


for _model in (STyUp, STyArrow, STyProd):
    _model.model_rebuild()

for _model in (
    SLam, SApp, SQuote, SSplice, SSucc, SIter, SIf, SPair, SFst, SSnd, SPar,
    SSeq, SAnnot, SDef,
):
    _model.model_rebuild()
