"""Deterministic validation of terms against claimed indices.

Validation order (fixed): constructor legality at the claimed phase and
stage, then the node's stored type, then the constructor's own rule,
then the children left to right. The first failure wins.
"""

from __future__ import annotations

from typing import Optional, Tuple

from stagec.kernel.rules import check_annotation, check_indices, check_node
from stagec.kernel.violations import Violation
from stagec.models.terms import Term
from stagec.models.types import EMPTY, Ctx, Phase, Stage, Ty
from stagec.util.errors import IllTypedTerm

# Paths are linked (parent, step) pairs so deep terms stay linear in memory.
_Trail = Optional[Tuple["_Trail", str]]


def _unwind(trail: _Trail) -> Tuple[str, ...]:
    steps = []
    while trail is not None:
        trail, step = trail
        steps.append(step)
    return tuple(reversed(steps))


def validate(
    t: Term,
    phase: Phase,
    stage: Stage,
    ty: Ty,
    ctx: Ctx = EMPTY,
) -> Optional[Violation]:
    """Check `t` against (phase, stage, ty, ctx).

    Returns None when every node satisfies its typing rule, else the first
    violation in pre-order. Runs on an explicit stack, so arbitrarily deep
    trees are fine.
    """
    stack: list = [(t, phase, stage, ty, ctx, None)]
    while stack:
        term, ph, st, want, gamma, trail = stack.pop()
        v = check_indices(term, ph, st) or check_annotation(term, ph, st, want)
        if v is None:
            result = check_node(term, ph, st, gamma)
            if isinstance(result, Violation):
                v = result
        if v is not None:
            return v.model_copy(update={"path": _unwind(trail)})
        for step, child, cph, cst, cty, cctx in reversed(result):
            stack.append((child, cph, cst, cty, cctx, (trail, step)))
    return None


def ensure_valid(
    t: Term,
    phase: Phase,
    stage: Stage,
    ty: Ty,
    ctx: Ctx = EMPTY,
) -> Term:
    """Like validate, but raises IllTypedTerm; returns `t` for chaining."""
    v = validate(t, phase, stage, ty, ctx)
    if v is not None:
        raise IllTypedTerm(v)
    return t


def validate_self(t: Term, ctx: Ctx = EMPTY) -> Optional[Violation]:
    """Validate `t` at the indices its own annotation records."""
    return validate(t, t.ty.phase, t.ty.stage, t.ty, ctx)
