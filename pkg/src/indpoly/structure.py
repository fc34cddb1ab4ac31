"""Structural invariants of graph expressions, derived without expansion where
the constructor allows it.

Maximal stable sets of a disjoint union are unions of maximal stable sets of
the parts; those of a join lie inside a single summand.  Hence a union is
well-covered iff every part is (alpha adds up), and a join is well-covered
iff every nonempty summand is well-covered with a common alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import analysis
from .expr import (
    BudgetExceeded,
    Complete,
    Corona,
    Cycle,
    Explicit,
    GraphExpr,
    Join,
    Multipartite,
    Path,
    Union,
    expand,
    vertex_count,
)
from .graph import claw_free

# explicit leaves are enumerated, so keep their budget small
EXPANSION_BUDGET = 64


@dataclass(frozen=True)
class WellCoverVerdict:
    well_covered: bool | None  # None: needs expansion beyond the budget
    alpha: int | None
    structural: bool = True

    @property
    def needs_expansion(self) -> bool:
        return self.well_covered is None

    def to_json(self) -> dict:
        return {
            "well_covered": self.well_covered,
            "alpha": None if self.alpha is None else str(self.alpha),
            "structural": self.structural,
            "needs_expansion": self.needs_expansion,
        }


NEEDS_EXPANSION = WellCoverVerdict(None, None, False)


def _nonempty(children):
    return [c for c in children if vertex_count(c) > 0]


@lru_cache(maxsize=4096)
def alpha_expr(e: GraphExpr, budget: int = EXPANSION_BUDGET) -> int:
    if isinstance(e, Complete):
        return 1 if e.n else 0
    if isinstance(e, Multipartite):
        return max(e.parts)
    if isinstance(e, Path):
        return (e.n + 1) // 2
    if isinstance(e, Cycle):
        return e.n // 2
    if isinstance(e, Union):
        return sum(alpha_expr(c, budget) for c in e.children)
    if isinstance(e, Join):
        return max(alpha_expr(c, budget) for c in e.children)
    if isinstance(e, Corona):
        return vertex_count(e.child)
    if isinstance(e, Explicit):
        return analysis.alpha(e.graph)
    raise TypeError(f"not a graph expression: {e!r}")


@lru_cache(maxsize=4096)
def omega_expr(e: GraphExpr, budget: int = EXPANSION_BUDGET) -> int:
    if isinstance(e, Complete):
        return e.n
    if isinstance(e, Multipartite):
        return len(e.parts)
    if isinstance(e, Path):
        return min(e.n, 2)
    if isinstance(e, Cycle):
        return 3 if e.n == 3 else 2
    if isinstance(e, Union):
        return max(omega_expr(c, budget) for c in e.children)
    if isinstance(e, Join):
        return sum(omega_expr(c, budget) for c in e.children)
    if isinstance(e, Corona):
        n = vertex_count(e.child)
        return 0 if n == 0 else max(2, omega_expr(e.child, budget))
    if isinstance(e, Explicit):
        return analysis.omega(e.graph)
    raise TypeError(f"not a graph expression: {e!r}")


@lru_cache(maxsize=4096)
def well_covered_expr(e: GraphExpr, budget: int = EXPANSION_BUDGET) -> WellCoverVerdict:
    if isinstance(e, Complete):
        return WellCoverVerdict(True, 1 if e.n else 0)
    if isinstance(e, Multipartite):
        # the maximal stable sets are exactly the parts
        return WellCoverVerdict(len(set(e.parts)) == 1, max(e.parts))
    if isinstance(e, Corona):
        return WellCoverVerdict(True, vertex_count(e.child))
    if isinstance(e, Union):
        verdicts = [well_covered_expr(c, budget) for c in e.children]
        if any(v.well_covered is False for v in verdicts):
            total = None if any(v.alpha is None for v in verdicts) else sum(v.alpha for v in verdicts)
            return WellCoverVerdict(False, total, all(v.structural for v in verdicts))
        if any(v.needs_expansion for v in verdicts):
            return NEEDS_EXPANSION
        return WellCoverVerdict(True, sum(v.alpha for v in verdicts), all(v.structural for v in verdicts))
    if isinstance(e, Join):
        kids = _nonempty(e.children)
        if not kids:
            return WellCoverVerdict(True, 0)
        verdicts = [well_covered_expr(c, budget) for c in kids]
        if any(v.well_covered is False for v in verdicts):
            return WellCoverVerdict(False, alpha_expr(e, budget), all(v.structural for v in verdicts))
        if any(v.needs_expansion for v in verdicts):
            return NEEDS_EXPANSION
        alphas = {v.alpha for v in verdicts}
        return WellCoverVerdict(len(alphas) == 1, max(alphas), all(v.structural for v in verdicts))
    # Path, Cycle, Explicit: decide on the materialised graph
    try:
        g = expand(e, budget)
    except BudgetExceeded:
        return NEEDS_EXPANSION
    wc, _ = analysis.well_covered_witness(g)
    return WellCoverVerdict(wc, analysis.alpha(g), False)


@lru_cache(maxsize=4096)
def claw_free_expr(e: GraphExpr, budget: int = EXPANSION_BUDGET) -> bool | None:
    """Claw-freeness, or ``None`` when it cannot be settled within ``budget``."""
    if isinstance(e, (Complete, Path, Cycle)):
        return True
    if isinstance(e, Multipartite):
        # a claw needs a part with three vertices plus a centre elsewhere
        return len(e.parts) == 1 or max(e.parts) < 3
    if isinstance(e, Union):
        vals = [claw_free_expr(c, budget) for c in e.children]
        if False in vals:
            return False
        return None if None in vals else True
    if isinstance(e, Join):
        kids = _nonempty(e.children)
        if len(kids) == 1:
            return claw_free_expr(kids[0], budget)
        # three mutually non-adjacent leaves must share a summand; any vertex
        # of another summand is then a centre
        if any(alpha_expr(c, budget) >= 3 for c in kids):
            return False
        vals = [claw_free_expr(c, budget) for c in kids]
        if False in vals:
            return False
        return None if None in vals else True
    try:
        return claw_free(expand(e, budget))
    except BudgetExceeded:
        return None


def connected_expr(e: GraphExpr) -> bool | None:
    n = vertex_count(e)
    if n == 0:
        return False
    if isinstance(e, (Complete, Path, Cycle)):
        return True
    if isinstance(e, Multipartite):
        return len(e.parts) > 1 or e.parts[0] == 1
    if isinstance(e, Union):
        return len(_nonempty(e.children)) == 1 and connected_expr(_nonempty(e.children)[0])
    if isinstance(e, Join):
        kids = _nonempty(e.children)
        return True if len(kids) > 1 else connected_expr(kids[0])
    if isinstance(e, Corona):
        return connected_expr(e.child)
    if isinstance(e, Explicit):
        return e.graph.is_connected()
    return None


def expr_components(e: GraphExpr) -> list[GraphExpr]:
    """Connected components as expressions, when the structure exposes them."""
    if vertex_count(e) == 0:
        return []
    if isinstance(e, Union):
        out = []
        for c in e.children:
            out.extend(expr_components(c))
        return out
    if isinstance(e, Multipartite) and len(e.parts) == 1:
        return [Complete(1)] * e.parts[0]
    if isinstance(e, Explicit):
        comps = e.graph.components()
        if len(comps) == 1:
            return [e]
        return [Explicit(e.graph.induced(c)) for c in comps]
    if isinstance(e, Corona) and isinstance(e.child, (Union, Explicit, Multipartite)):
        return [Corona(c) for c in expr_components(e.child)]
    if isinstance(e, Join):
        kids = _nonempty(e.children)
        if len(kids) == 1:
            return expr_components(kids[0])
    return [e]
