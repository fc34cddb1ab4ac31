import random

from indpoly import graph as G
from indpoly.analysis import is_well_covered
from indpoly.certify import Conclusion, Rule, certify_unimodal
from indpoly.engine import indpoly_branch
from indpoly.expr import expand, parse_expr
from indpoly.families import counterexample_for_alpha, h_family
from indpoly.poly import is_log_concave, is_unimodal

from conftest import random_expr, random_graph


def test_k333_via_alpha3_rule():
    c = certify_unimodal(G.multipartite([3, 3, 3]))
    assert c.rule is Rule.WC_ALPHA3 and c.audited
    assert indpoly_branch(G.multipartite([3, 3, 3])) == [1, 9, 9, 3]


def test_two_c7_via_alpha6_rule():
    c = certify_unimodal(G.disjoint_union(G.cycle(7), G.cycle(7)))
    assert c.rule is Rule.ALPHA6_COMPONENTS and c.audited
    assert Rule.KEILSON_GERBER in c.rules()
    assert Rule.WC_ALPHA3 in c.rules()


def test_no_certificate_for_counterexamples():
    assert certify_unimodal(h_family(1800)) is None
    for k in (4, 5, 6, 7):
        assert certify_unimodal(counterexample_for_alpha(k).expr) is None


def test_alpha_le2_is_log_concave():
    c = certify_unimodal(parse_expr("union(KM(2,2), K(5), P(3))"))
    assert c.rule is Rule.ALPHA_LE2_COMPONENTS and c.conclusion is Conclusion.LOG_CONCAVE


def test_other_rules_fire():
    seen = set()
    exprs = [
        "union(P(3), KM(3,3))",               # alpha-2 part beside a well-covered alpha-3 part
        "union(K(1), KM(3,3))",               # disconnected well-covered, alpha 4
        "join(union(4*K(1)), KM(4,4))",       # connected well-covered, omega <= alpha = 4
        "union(C(7), KM(3,3,3))",             # alpha 6
        "union(K(2), C(9))",                  # product of component certificates
        "C(9)",
        "corona(K(3))",
    ]
    for text in exprs:
        c = certify_unimodal(parse_expr(text))
        assert c is not None and c.audited, text
        seen |= c.rules()
    assert {Rule.ALPHA5_UNION, Rule.WC_ALPHA4_DISCONNECTED, Rule.OMEGA_LE_ALPHA_LE5_WC,
            Rule.ALPHA6_COMPONENTS, Rule.CLAW_FREE, Rule.KEILSON_GERBER} <= seen


def test_direct_computation_is_opt_in():
    g = G.multipartite([1, 3])
    assert certify_unimodal(g, allow_roots=False) is None
    c = certify_unimodal(g, allow_roots=False, allow_direct=True)
    assert c.rule is Rule.DIRECT


def test_soundness_random_graphs():
    rng = random.Random(77)
    issued = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 12))
        c = certify_unimodal(g)
        if c is None:
            continue
        issued += 1
        p = indpoly_branch(g)
        assert c.audited
        assert is_unimodal(p)
        if c.conclusion is Conclusion.LOG_CONCAVE:
            assert is_log_concave(p)
    assert issued > 150


def test_soundness_random_expressions():
    rng = random.Random(78)
    for _ in range(200):
        e = random_expr(rng)
        c = certify_unimodal(e)
        if c is not None:
            p = indpoly_branch(expand(e))
            assert is_unimodal(p)


def test_certifies_every_small_wc_alpha_le3():
    rng = random.Random(79)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 10))
        r = is_well_covered(g)
        if r.well_covered and r.alpha <= 3:
            assert certify_unimodal(g) is not None


def test_json_shape():
    c = certify_unimodal(parse_expr("2*C(7)"))
    data = c.to_json()
    assert data["rule"] == "Alpha6ComponentRule"
    assert data["premises"][0] == {"claim": "alpha", "value": "6"}
