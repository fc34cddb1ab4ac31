"""Well-covered graphs with non-unimodal independence polynomials.

``H_n = (4 K_10 disjoint) + K_{4,...,4}`` (n parts of size 4) has
``I(H_n) = n (1+x)^4 + (1+10x)^4 - n``.  Adding ``q`` disjoint cliques gives
a well-covered graph with alpha ``q + 4``; with cliques of size ``1000 q``
its polynomial is ``I(H_1701) * (1 + 1000 q x)^q``, whose coefficient at
``q + 3`` is a strict local minimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .engine import indpoly_expr
from .expr import Complete, GraphExpr, Multipartite, join, repeat, union
from .poly import Polynomial, ShapeReport, binomial_power, mul, shape
from .structure import alpha_expr, connected_expr, well_covered_expr

BASE_N = 1701


def h_family(n: int) -> GraphExpr:
    if n < 1:
        raise ValueError("H_n needs n >= 1")
    return join(repeat(4, Complete(10)), Multipartite((4,) * n))


def h_coefficients(n: int) -> Polynomial:
    return Polynomial((1, 40 + 4 * n, 600 + 6 * n, 4000 + 4 * n, 10000 + n))


def _runs(values: list[int]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for v in values:
        if runs and runs[-1][1] == v - 1:
            runs[-1] = (runs[-1][0], v)
        else:
            runs.append((v, v))
    return runs


@dataclass
class ScanResult:
    lo: int
    hi: int
    non_unimodal: list[int] = field(default_factory=list)
    non_log_concave: list[int] = field(default_factory=list)

    @property
    def non_unimodal_windows(self) -> list[tuple[int, int]]:
        return _runs(self.non_unimodal)

    @property
    def non_log_concave_windows(self) -> list[tuple[int, int]]:
        return _runs(self.non_log_concave)

    def to_json(self) -> dict:
        return {
            "family": "h",
            "range": [str(self.lo), str(self.hi)],
            "non_unimodal": [[str(a), str(b)] for a, b in self.non_unimodal_windows],
            "non_log_concave": [[str(a), str(b)] for a, b in self.non_log_concave_windows],
        }


def scan_h_family(n_lo: int, n_hi: int) -> ScanResult:
    """Exact non-unimodal and non-log-concave parameter sets over ``[n_lo, n_hi]``."""
    if n_lo > n_hi:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    if n_lo < 1:
        raise ValueError("H_n needs n >= 1")
    result = ScanResult(n_lo, n_hi)
    for n in range(n_lo, n_hi + 1):
        rep = shape(h_coefficients(n))
        if not rep.unimodal:
            result.non_unimodal.append(n)
        if not rep.log_concave:
            result.non_log_concave.append(n)
    return result


def scan_rows(n_lo: int, n_hi: int):
    """Per-parameter rows for tabular output."""
    for n in range(n_lo, n_hi + 1):
        p = h_coefficients(n)
        rep = shape(p)
        yield n, p, rep


BASE_POLY = Polynomial((1, 6844, 10806, 10804, 11701))


def lemma3_poly(k: int) -> Polynomial:
    """``(1 + 6844x + 10806x^2 + 10804x^3 + 11701x^4) * (1 + 1000 k x)^k``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return mul(BASE_POLY, binomial_power(1, 1000 * k, k))


def lemma3_top_coefficients(k: int) -> tuple[int, int, Fraction]:
    """Closed forms for the coefficients at ``k+4``, ``k+3`` and ``k+2``.

    The last one is a Fraction because ``10**(3(k-2))`` is fractional at k = 1.
    """
    top = 11701 * 10 ** (3 * k) * k ** k
    below = Fraction(10) ** (3 * (k - 1)) * k ** k * 10815701
    two_below = Fraction(10) ** (3 * (k - 2)) * Fraction(k) ** (k - 1) * (21633619701 * k - 11701) / 2
    return top, below, two_below


def lemma3_differences(k: int) -> tuple[Fraction, Fraction]:
    """``s_{k+4} - s_{k+3}`` and ``s_{k+2} - s_{k+3}`` in closed form."""
    up = Fraction(10) ** (3 * (k - 1)) * k ** k * 885299
    down = Fraction(10) ** (3 * (k - 2)) * Fraction(k) ** (k - 1) * (2217701 * k - 11701) / 2
    return up, down


def gq_corrected(q: int) -> GraphExpr:
    """``q`` copies of ``K_{1000q}`` beside ``H_1701``; I equals ``lemma3_poly(q)``."""
    if q < 0:
        raise ValueError("q must be >= 0")
    h = h_family(BASE_N)
    return union(repeat(q, Complete(1000 * q)), h) if q else h


def gq_literal(q: int) -> GraphExpr:
    """``q`` copies of ``K_1000`` beside ``H_1701``, as the construction is printed."""
    if q < 0:
        raise ValueError("q must be >= 0")
    h = h_family(BASE_N)
    return union(repeat(q, Complete(1000)), h) if q else h


def gq_literal_poly(q: int) -> Polynomial:
    return mul(BASE_POLY, binomial_power(1, 1000, q))


def connected_double(e: GraphExpr) -> GraphExpr:
    """``e + e``: connected, same alpha, polynomial ``2 I(e) - 1``."""
    return join(e, e)


@dataclass
class FamilyReport:
    name: str
    params: dict
    expr: GraphExpr | None
    polynomial: Polynomial
    shape: ShapeReport
    well_covered: bool | None
    alpha: int
    connected: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "family": self.name,
            "params": {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                       for k, v in self.params.items()},
            "polynomial": self.polynomial.to_json(),
            "shape": self.shape.to_json(),
            "well_covered": self.well_covered,
            "alpha": str(self.alpha),
            "connected": self.connected,
            "notes": list(self.notes),
        }


def family_report(name: str, e: GraphExpr, params: dict, poly: Polynomial | None = None) -> FamilyReport:
    p = poly if poly is not None else indpoly_expr(e)
    verdict = well_covered_expr(e)
    a = alpha_expr(e)
    if p.degree != a:
        raise AssertionError(f"degree {p.degree} disagrees with alpha {a}")
    return FamilyReport(name, params, e, p, shape(p), verdict.well_covered, a, connected_expr(e))


def counterexample_for_alpha(k: int, connected: bool = False) -> FamilyReport:
    """Well-covered graph with alpha ``k`` whose polynomial dips at ``k - 1``."""
    if k < 4:
        raise ValueError("counterexamples start at alpha = 4")
    base = gq_corrected(k - 4)
    e = connected_double(base) if connected else base
    poly = indpoly_expr(e)
    expected = lemma3_poly(k - 4)
    if connected:
        expected = expected * 2 - 1
    if poly != expected:
        raise AssertionError("polynomial disagrees with the closed form")
    rep = family_report("counterexample", e, {"alpha": k, "connected": connected}, poly)
    dip = k - 1
    if not (poly[dip - 1] > poly[dip] < poly[dip + 1]):
        raise AssertionError(f"no dip at index {dip}")
    if not rep.well_covered or rep.alpha != k:
        raise AssertionError("structural well-coveredness or alpha check failed")
    if connected and k < 8:
        rep.notes.append("connected counterexamples are claimed from alpha 8 on; this one is verified directly")
    return rep
