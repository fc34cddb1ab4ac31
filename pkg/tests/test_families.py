from fractions import Fraction

import pytest
import sympy

from indpoly.analysis import alpha, is_well_covered
from indpoly.engine import indpoly_branch, indpoly_expr
from indpoly.expr import Complete, Multipartite, expand, join, parse_expr, repeat, union, vertex_count
from indpoly.families import (
    BASE_POLY,
    BASE_N,
    connected_double,
    counterexample_for_alpha,
    family_report,
    gq_corrected,
    gq_literal,
    gq_literal_poly,
    h_coefficients,
    h_family,
    lemma3_differences,
    lemma3_poly,
    lemma3_top_coefficients,
    scan_h_family,
)
from indpoly.poly import shape
from indpoly.structure import connected_expr, well_covered_expr

x = sympy.Symbol("x")


def sympy_coeffs(expr) -> list[int]:
    return [int(c) for c in reversed(sympy.Poly(sympy.expand(expr), x).all_coeffs())]


def test_h_coefficients_match_symbolic_evaluation():
    for n in list(range(1, 60)) + [1700, 1701, 1800, 1999, 2000, 2452, 2453, 3000]:
        assert indpoly_expr(h_family(n)) == h_coefficients(n)


def test_h_coefficients_match_sympy():
    for n in (1, 25, 1701, 3000):
        assert h_coefficients(n) == sympy_coeffs(n * (1 + x) ** 4 + (1 + 10 * x) ** 4 - n)


def test_h_printed_values():
    assert indpoly_expr(h_family(1800)) == [1, 7240, 11400, 11200, 11800]
    assert indpoly_expr(h_family(25)) == [1, 140, 750, 4100, 10025]
    assert indpoly_expr(h_family(10)) == [1, 80, 660, 4040, 10010]


def test_h_requires_positive_n():
    with pytest.raises(ValueError):
        h_family(0)


def test_scan_windows():
    r = scan_h_family(1, 3000)
    assert r.non_unimodal == list(range(1701, 2000))
    assert r.non_log_concave == list(range(24, 2453))
    assert r.to_json()["non_unimodal"] == [["1701", "1999"]]


def test_scan_small_range_is_empty():
    r = scan_h_family(1, 23)
    assert r.non_unimodal == [] and r.non_log_concave == []
    assert r.to_json()["non_log_concave"] == []


def test_scan_rejects_bad_ranges():
    with pytest.raises(ValueError):
        scan_h_family(5, 4)
    with pytest.raises(ValueError):
        scan_h_family(0, 4)


def test_lemma3_small_cases():
    assert lemma3_poly(0) == BASE_POLY
    assert BASE_POLY == h_coefficients(BASE_N)
    p1 = lemma3_poly(1)
    assert (p1[4], p1[5]) == (10815701, 11701000)
    assert lemma3_poly(2)[4] == 43267227701
    with pytest.raises(ValueError):
        lemma3_poly(-1)


def test_lemma3_matches_sympy():
    base = 1 + 6844 * x + 10806 * x**2 + 10804 * x**3 + 11701 * x**4
    for k in (0, 1, 2, 5, 13):
        assert lemma3_poly(k) == sympy_coeffs(base * (1 + 1000 * k * x) ** k)


@pytest.mark.parametrize("k", range(0, 41))
def test_lemma3_dip(k):
    p = lemma3_poly(k)
    assert p.degree == k + 4
    assert p[k + 2] > p[k + 3] < p[k + 4]
    assert shape(p).dip_witness == k + 3


@pytest.mark.parametrize("k", range(1, 41))
def test_lemma3_closed_forms(k):
    p = lemma3_poly(k)
    top, below, two_below = lemma3_top_coefficients(k)
    assert (p[k + 4], p[k + 3], p[k + 2]) == (top, below, two_below)
    up, down = lemma3_differences(k)
    assert up == p[k + 4] - p[k + 3] > 0
    assert down == p[k + 2] - p[k + 3] > 0
    assert 2217701 * k - 11701 > 0


def test_lemma3_closed_form_at_one():
    _, _, two_below = lemma3_top_coefficients(1)
    assert two_below == Fraction(10816804)


def test_gq_corrected_matches_lemma3():
    for q in range(0, 41):
        assert indpoly_expr(gq_corrected(q)) == lemma3_poly(q)


def test_gq_at_zero():
    assert gq_corrected(0) == gq_literal(0) == h_family(BASE_N)


def test_gq_literal_polynomial():
    for q in (1, 2, 3, 10):
        assert indpoly_expr(gq_literal(q)) == gq_literal_poly(q)


def test_gq_literal_non_unimodal_set():
    bad = {q for q in range(1, 201) if not shape(gq_literal_poly(q)).unimodal}
    assert bad == {1, 2}
    assert all(not shape(lemma3_poly(q)).unimodal for q in range(1, 201))


def test_gq_structure():
    for q in (0, 1, 3):
        v = well_covered_expr(gq_corrected(q))
        assert v.well_covered and v.alpha == q + 4 and v.structural
    assert vertex_count(gq_corrected(2)) == 2 * 2000 + 40 + 4 * 1701
    with pytest.raises(ValueError):
        gq_corrected(-1)


def test_connected_double():
    assert indpoly_branch(expand(connected_double(Complete(1)))) == [1, 2]
    assert expand(connected_double(Complete(1))).edge_count == 1
    for text in ("P(4)", "union(K(2), K(3))", "C(5)"):
        e = parse_expr(text)
        d = connected_double(e)
        assert indpoly_expr(d) == indpoly_expr(e) * 2 - 1
        assert expand(d).is_connected()
        assert alpha(expand(d)) == alpha(expand(e))


@pytest.mark.parametrize("k", [4, 5, 8, 12])
def test_counterexamples(k):
    for connected in (False, True):
        rep = counterexample_for_alpha(k, connected)
        assert rep.alpha == k and rep.well_covered
        p = rep.polynomial
        assert p[k - 2] > p[k - 1] < p[k]
        assert not rep.shape.unimodal
        assert rep.connected is (connected or k == 4)
        if connected:
            assert p == lemma3_poly(k - 4) * 2 - 1
            assert bool(rep.notes) is (k < 8)


def test_counterexample_rejects_small_alpha():
    with pytest.raises(ValueError):
        counterexample_for_alpha(3)


def test_family_report_json():
    data = family_report("h", h_family(1800), {"n": 1800}).to_json()
    assert data["polynomial"] == ["1", "7240", "11400", "11200", "11800"]
    assert data["alpha"] == "4" and data["well_covered"] is True
    assert data["params"] == {"n": "1800"}


def test_scaled_down_analogue_by_enumeration():
    # same shape as G_q with small cliques, small enough to enumerate
    h = join(repeat(4, Complete(3)), Multipartite((4,) * 5))
    for q in (0, 1, 2):
        e = union(repeat(q, Complete(5)), h)
        g = expand(e)
        report = is_well_covered(g)
        verdict = well_covered_expr(e)
        assert report.well_covered == verdict.well_covered is True
        assert report.alpha == verdict.alpha == q + 4
        assert indpoly_branch(g) == indpoly_expr(e)
        assert connected_expr(e) is (q == 0)
        d = connected_double(e)
        assert is_well_covered(expand(d)).well_covered
