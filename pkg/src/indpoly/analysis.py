"""Stability and clique numbers, well-coveredness, and executable versions of
the structural facts about independence polynomials of small-alpha graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Iterator

from . import graph as G
from .engine import indpoly_branch
from .graph import Graph, bits, components_in, full_mask
from .poly import Polynomial, real_rooted


# -- alpha / omega -----------------------------------------------------------

def alpha(g: Graph) -> int:
    """Stability number by branch and reduce (exponential worst case)."""
    masks = g.masks
    memo: dict[int, int] = {}

    def solve(alive: int) -> int:
        if not alive:
            return 0
        hit = memo.get(alive)
        if hit is not None:
            return hit
        comps = components_in(masks, alive)
        if len(comps) > 1:
            result = sum(solve(c) for c in comps)
        else:
            lo_v, lo_d, hi_v, hi_d = -1, 1 << 30, -1, -1
            size = alive.bit_count()
            for v in bits(alive):
                d = (masks[v] & alive).bit_count()
                if d < lo_d:
                    lo_v, lo_d = v, d
                if d > hi_d:
                    hi_v, hi_d = v, d
            if hi_d == size - 1 and lo_d == size - 1:
                result = 1
            elif lo_d <= 1:
                # a vertex of degree <= 1 lies in some maximum stable set
                result = 1 + solve(alive & ~(masks[lo_v] | 1 << lo_v))
            else:
                result = max(
                    solve(alive & ~(1 << hi_v)),
                    1 + solve(alive & ~(masks[hi_v] | 1 << hi_v)),
                )
        memo[alive] = result
        return result

    return solve(full_mask(g.n))


def omega(g: Graph) -> int:
    return alpha(G.complement(g))


def maximal_stable_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every inclusion-maximal stable set, via pivoting Bron-Kerbosch on the complement."""
    full = full_mask(g.n)
    co = [full ^ m ^ (1 << v) for v, m in enumerate(g.masks)]

    def expand(r: int, p: int, x: int):
        if not p and not x:
            yield tuple(bits(r))
            return
        pivot = max(bits(p | x), key=lambda u: (p & co[u]).bit_count())
        for v in bits(p & ~co[pivot]):
            yield from expand(r | 1 << v, p & co[v], x & co[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, full, 0)


# -- well-coveredness --------------------------------------------------------

@dataclass
class WellCoverReport:
    alpha: int
    omega: int
    well_covered: bool
    very_well_covered: bool
    girth: int | None  # None: acyclic
    pendant_matching: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "omega": str(self.omega),
            "well_covered": self.well_covered,
            "very_well_covered": self.very_well_covered,
            "girth": "acyclic" if self.girth is None else str(self.girth),
            "pendant_matching": self.pendant_matching,
            "witness": None if self.witness is None else [[str(v) for v in s] for s in self.witness],
        }


def well_covered_witness(g: Graph) -> tuple[bool, tuple | None]:
    first = None
    for s in maximal_stable_sets(g):
        if first is None:
            first = s
        elif len(s) != len(first):
            return False, (first, s)
    return True, None


def pendant_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if g.degree(u) == 1 or g.degree(v) == 1]


def pendant_matching(g: Graph) -> bool:
    """True when the pendant edges cover every vertex exactly once."""
    cover = [0] * g.n
    for u, v in pendant_edges(g):
        cover[u] += 1
        cover[v] += 1
    return all(c == 1 for c in cover)


def is_well_covered(g: Graph) -> WellCoverReport:
    wc, witness = well_covered_witness(g)
    a = alpha(g)
    isolated = any(m == 0 for m in g.masks)
    return WellCoverReport(
        alpha=a,
        omega=omega(g),
        well_covered=wc,
        very_well_covered=wc and not isolated and g.n == 2 * a,
        girth=G.girth(g),
        pendant_matching=pendant_matching(g),
        witness=witness,
    )


@dataclass(frozen=True)
class TheoremCheck:
    applicable: bool
    holds: bool
    well_covered: bool | None = None
    pendant_matching: bool | None = None


def pendant_matching_theorem_check(g: Graph) -> TheoremCheck:
    """Girth >= 6 connected graphs other than K1 and C7: well-covered iff the
    pendant edges form a perfect matching."""
    gi = G.girth(g)
    applicable = (
        g.n > 1
        and g.is_connected()
        and (gi is None or gi >= 6)
        and not (g.n == 7 and G.is_isomorphic(g, G.cycle(7)))
    )
    if not applicable:
        return TheoremCheck(False, True)
    wc, _ = well_covered_witness(g)
    pm = pendant_matching(g)
    return TheoremCheck(True, wc == pm, wc, pm)


# -- checked facts -----------------------------------------------------------

@dataclass
class Fact:
    claim: str
    hypothesis_met: bool
    holds: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "hypothesis_met": self.hypothesis_met,
            "holds": self.holds,
            "detail": {k: _jsonable(v) for k, v in self.detail.items()},
        }


def _jsonable(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Polynomial):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def lemma2_check(g: Graph, poly: Polynomial | None = None) -> Fact:
    """omega <= alpha implies s_alpha <= s_(alpha-1)."""
    a, w = alpha(g), omega(g)
    p = poly if poly is not None else indpoly_branch(g)
    holds = a == 0 or p[a] <= p[a - 1]
    return Fact("s_alpha <= s_(alpha-1)", a >= 1 and w <= a, holds,
                {"alpha": a, "omega": w, "s_alpha": p[a], "s_alpha_minus_1": p[a - 1] if a else 0})


def prop1_check(g: Graph, poly: Polynomial | None = None, well_covered: bool | None = None) -> Fact:
    """Well-covered implies s_0 <= s_1 <= ... <= s_ceil(alpha/2)."""
    if well_covered is None:
        well_covered, _ = well_covered_witness(g)
    p = poly if poly is not None else indpoly_branch(g)
    top = ceil(p.degree / 2)
    prefix = [p[k] for k in range(top + 1)]
    holds = all(x <= y for x, y in zip(prefix, prefix[1:]))
    return Fact("nondecreasing up to ceil(alpha/2)", well_covered, holds, {"alpha": p.degree, "prefix": prefix})


def corollary1_check(g: Graph, poly: Polynomial | None = None) -> Fact:
    """Well-covered with omega <= alpha = 3 implies log-concave."""
    from .poly import is_log_concave

    p = poly if poly is not None else indpoly_branch(g)
    met = p.degree == 3 and omega(g) <= 3 and well_covered_witness(g)[0]
    return Fact("log-concave", met, is_log_concave(p), {"alpha": p.degree})


def lemma1_check(g: Graph, poly: Polynomial | None = None) -> Fact:
    """alpha = 2 implies real roots, i.e. s_1**2 >= 4*s_2."""
    p = poly if poly is not None else indpoly_branch(g)
    rr = real_rooted(p)
    disc = p[1] ** 2 >= 4 * p[2]
    return Fact("real-rooted", p.degree == 2, rr, {"discriminant_ok": disc})
