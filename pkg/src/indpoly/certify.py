"""Unimodality certificates built from sufficient conditions on small alpha.

A certificate is a tree: leaves are checked facts (alpha, omega,
well-coveredness, claw-freeness, real-rootedness), inner nodes combine
component certificates through the Keilson-Gerber product rules
(log-concave * log-concave is log-concave, log-concave * unimodal is
unimodal).  Every certificate whose polynomial can be computed is audited
against the coefficients before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .engine import DEFAULT_BUDGET, indpoly_expr
from .expr import BudgetExceeded, Explicit, GraphExpr, vertex_count
from .graph import Graph
from .poly import Polynomial, is_log_concave, is_unimodal, real_rooted
from .structure import (
    EXPANSION_BUDGET,
    alpha_expr,
    claw_free_expr,
    expr_components,
    omega_expr,
    well_covered_expr,
)


class Rule(str, Enum):
    ALPHA_LE2_COMPONENTS = "AlphaLe2Components"
    WC_ALPHA3 = "WCAlpha3"
    WC_ALPHA4_DISCONNECTED = "WCAlpha4Disconnected"
    ALPHA5_UNION = "Alpha5UnionRule"
    OMEGA_LE_ALPHA_LE5_WC = "OmegaLeAlphaLe5WC"
    ALPHA6_COMPONENTS = "Alpha6ComponentRule"
    CLAW_FREE = "ClawFree"
    REAL_ROOTED_NEWTON = "RealRootedNewton"
    KEILSON_GERBER = "KeilsonGerberComposition"
    DIRECT = "DirectComputation"


class Conclusion(str, Enum):
    UNIMODAL = "Unimodal"
    LOG_CONCAVE = "LogConcave"


class UnsoundCertificate(AssertionError):
    pass


@dataclass
class Premise:
    claim: str
    value: object

    def to_json(self) -> dict:
        v = self.value
        if isinstance(v, int) and not isinstance(v, bool):
            v = str(v)
        return {"claim": self.claim, "value": v}


@dataclass
class Certificate:
    rule: Rule
    conclusion: Conclusion
    premises: list = field(default_factory=list)
    subject: str = ""
    audited: bool = False

    def to_json(self) -> dict:
        return {
            "rule": self.rule.value,
            "conclusion": self.conclusion.value,
            "subject": self.subject,
            "audited": self.audited,
            "premises": [p.to_json() for p in self.premises],
        }

    def rules(self) -> set[Rule]:
        out = {self.rule}
        for p in self.premises:
            if isinstance(p, Certificate):
                out |= p.rules()
        return out


class _Part:
    """Lazily computed invariants of one expression."""

    def __init__(self, e: GraphExpr, budget: int, poly_budget: int):
        self.e = e
        self.budget = budget
        self.poly_budget = poly_budget
        self._cache: dict = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def alpha(self) -> int:
        return self._get("alpha", lambda: alpha_expr(self.e, self.budget))

    @property
    def omega(self) -> int:
        return self._get("omega", lambda: omega_expr(self.e, self.budget))

    @property
    def well_covered(self) -> bool | None:
        return self._get("wc", lambda: well_covered_expr(self.e, self.budget).well_covered)

    @property
    def claw_free(self) -> bool | None:
        return self._get("claw", lambda: claw_free_expr(self.e, self.budget))

    @property
    def poly(self) -> Polynomial | None:
        def compute():
            try:
                return indpoly_expr(self.e, self.poly_budget)
            except BudgetExceeded:
                return None

        return self._get("poly", compute)


def _name(e: GraphExpr) -> str:
    from .expr import render

    text = render(e)
    return text if len(text) <= 200 else text[:197] + "..."


def _lemma1_leaf(part: _Part) -> list[Premise]:
    premises = [Premise("alpha", part.alpha)]
    p = part.poly
    if p is not None:
        rr = real_rooted(p)
        if not rr:
            raise UnsoundCertificate(f"alpha <= 2 graph {_name(part.e)} has non-real roots")
        premises.append(Premise("real_rooted", True))
    return premises


def _connected_cert(part: _Part, allow_roots: bool) -> Certificate | None:
    """Certificate for a single connected part with alpha >= 3."""
    subject = _name(part.e)
    a = part.alpha
    if part.claw_free:
        return Certificate(Rule.CLAW_FREE, Conclusion.LOG_CONCAVE, [Premise("claw_free", True)], subject)
    if a <= 5 and part.well_covered:
        base = [Premise("alpha", a), Premise("well_covered", True)]
        omega_ok = part.omega <= a
        if a == 3:
            if omega_ok:
                return Certificate(Rule.WC_ALPHA3, Conclusion.LOG_CONCAVE,
                                   base + [Premise("omega", part.omega), Premise("omega<=alpha", True)], subject)
            return Certificate(Rule.WC_ALPHA3, Conclusion.UNIMODAL, base, subject)
        if omega_ok:
            return Certificate(Rule.OMEGA_LE_ALPHA_LE5_WC, Conclusion.UNIMODAL,
                               base + [Premise("omega", part.omega), Premise("omega<=alpha", True)], subject)
    if allow_roots and part.poly is not None and real_rooted(part.poly):
        return Certificate(Rule.REAL_ROOTED_NEWTON, Conclusion.LOG_CONCAVE, [Premise("real_rooted", True)], subject)
    return None


def _compose(certs: list[Certificate], rule: Rule, subject: str, extra=()) -> Certificate | None:
    unimodal_only = [c for c in certs if c.conclusion is Conclusion.UNIMODAL]
    if len(unimodal_only) > 1:
        return None
    conclusion = Conclusion.UNIMODAL if unimodal_only else Conclusion.LOG_CONCAVE
    return Certificate(rule, conclusion, list(extra) + certs, subject)


def _component_cert(part: _Part, allow_roots: bool) -> Certificate | None:
    if part.alpha <= 2:
        return Certificate(Rule.ALPHA_LE2_COMPONENTS, Conclusion.LOG_CONCAVE, _lemma1_leaf(part), _name(part.e))
    return _connected_cert(part, allow_roots)


def _disconnected_cert(whole: _Part, parts: list[_Part], allow_roots: bool) -> Certificate | None:
    subject = _name(whole.e)
    a = whole.alpha
    wc = whole.well_covered
    if a == 4 and wc:
        return Certificate(Rule.WC_ALPHA4_DISCONNECTED, Conclusion.UNIMODAL,
                           [Premise("alpha", 4), Premise("well_covered", True), Premise("disconnected", True)], subject)
    if a == 5:
        split = _alpha5_split(parts)
        if split is not None:
            h1, h2 = split
            return Certificate(Rule.ALPHA5_UNION, Conclusion.UNIMODAL, [
                Premise("alpha", 5),
                Premise("alpha(H1)", 2),
                Premise("H1", [_name(p.e) for p in h1]),
                Premise("H2 well_covered", True),
                Premise("alpha(H2)", 3),
                Premise("H2", [_name(p.e) for p in h2]),
            ], subject)
    if a in (4, 5) and wc and whole.omega <= a:
        return Certificate(Rule.OMEGA_LE_ALPHA_LE5_WC, Conclusion.UNIMODAL,
                           [Premise("alpha", a), Premise("well_covered", True), Premise("omega<=alpha", True)], subject)
    if a == 6:
        mids = [p for p in parts if 3 <= p.alpha <= 5]
        if all(p.well_covered and p.omega <= p.alpha for p in mids):
            subs = []
            for p in parts:
                if p.alpha <= 2:
                    subs.append(Certificate(Rule.ALPHA_LE2_COMPONENTS, Conclusion.LOG_CONCAVE, _lemma1_leaf(p), _name(p.e)))
                elif p.alpha == 3:
                    subs.append(Certificate(Rule.WC_ALPHA3, Conclusion.LOG_CONCAVE, [
                        Premise("alpha", 3), Premise("well_covered", True),
                        Premise("omega", p.omega), Premise("omega<=alpha", True)], _name(p.e)))
                else:
                    subs.append(Certificate(Rule.OMEGA_LE_ALPHA_LE5_WC, Conclusion.UNIMODAL, [
                        Premise("alpha", p.alpha), Premise("well_covered", True),
                        Premise("omega", p.omega), Premise("omega<=alpha", True)], _name(p.e)))
            kg = _compose(subs, Rule.KEILSON_GERBER, subject)
            if kg is not None:
                return Certificate(Rule.ALPHA6_COMPONENTS, kg.conclusion,
                                   [Premise("alpha", 6), Premise("disconnected", True), kg], subject)
    subs = []
    for p in parts:
        c = _component_cert(p, allow_roots)
        if c is None:
            return None
        subs.append(c)
    return _compose(subs, Rule.KEILSON_GERBER, subject)


def _alpha5_split(parts: list[_Part]):
    """Split components into H1 with alpha 2 and a well-covered H2 with alpha 3."""
    small = [i for i, p in enumerate(parts) if p.alpha <= 2]
    for r in (1, 2):
        for idx in combinations(small, r):
            if sum(parts[i].alpha for i in idx) != 2:
                continue
            h1 = [parts[i] for i in idx]
            h2 = [p for i, p in enumerate(parts) if i not in idx]
            if all(p.well_covered for p in h2):
                return h1, h2
    return None


def certify_unimodal(
    target: GraphExpr | Graph,
    budget: int = EXPANSION_BUDGET,
    poly_budget: int = DEFAULT_BUDGET,
    allow_roots: bool = True,
    allow_direct: bool = False,
    audit: bool = True,
) -> Certificate | None:
    """Return a certificate that I(target; x) is unimodal, or ``None``.

    ``None`` means no rule applied; it says nothing about unimodality.
    """
    e = Explicit(target) if isinstance(target, Graph) else target
    whole = _Part(e, budget, poly_budget)
    cert = _certify(whole, allow_roots)
    if cert is None and allow_direct and whole.poly is not None and is_unimodal(whole.poly):
        concl = Conclusion.LOG_CONCAVE if is_log_concave(whole.poly) else Conclusion.UNIMODAL
        cert = Certificate(Rule.DIRECT, concl, [Premise("coefficients", whole.poly.to_json())], _name(e))
    if cert is not None and audit:
        _audit(cert, whole)
    return cert


def _certify(whole: _Part, allow_roots: bool) -> Certificate | None:
    if vertex_count(whole.e) == 0:
        return Certificate(Rule.ALPHA_LE2_COMPONENTS, Conclusion.LOG_CONCAVE, [Premise("alpha", 0)], "empty")
    parts = [_Part(c, whole.budget, whole.poly_budget) for c in expr_components(whole.e)]
    if all(p.alpha <= 2 for p in parts):
        premises = []
        for p in parts:
            premises.extend(_lemma1_leaf(p))
        return Certificate(Rule.ALPHA_LE2_COMPONENTS, Conclusion.LOG_CONCAVE, premises, _name(whole.e))
    if len(parts) == 1:
        return _connected_cert(parts[0], allow_roots)
    return _disconnected_cert(whole, parts, allow_roots)


def _audit(cert: Certificate, whole: _Part) -> None:
    p = whole.poly
    if p is None:
        return
    ok = is_log_concave(p) if cert.conclusion is Conclusion.LOG_CONCAVE else is_unimodal(p)
    if not ok:
        raise UnsoundCertificate(f"{cert.rule.value} certificate contradicted by {p.coeffs}")
    cert.audited = True
