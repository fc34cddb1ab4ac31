"""Independence polynomials, well-covered graphs and unimodality."""

__version__ = "0.1.0"

from .analysis import (
    WellCoverReport,
    alpha,
    is_well_covered,
    maximal_stable_sets,
    omega,
    pendant_matching_theorem_check,
)
from .certify import Certificate, certify_unimodal
from .engine import indpoly_branch, indpoly_bruteforce, indpoly_expr, stable_count
from .expr import expand, parse_expr, render, vertex_count
from .families import (
    connected_double,
    counterexample_for_alpha,
    gq_corrected,
    gq_literal,
    h_family,
    lemma3_poly,
    scan_h_family,
)
from .graph import Graph
from .graph6 import parse_graph6, to_graph6
from .poly import Polynomial, ShapeReport, real_rooted, shape
from .structure import well_covered_expr

__all__ = [
    "Certificate", "Graph", "Polynomial", "ShapeReport", "WellCoverReport",
    "alpha", "certify_unimodal", "connected_double", "counterexample_for_alpha",
    "expand", "gq_corrected", "gq_literal", "h_family", "indpoly_branch",
    "indpoly_bruteforce", "indpoly_expr", "is_well_covered", "lemma3_poly",
    "maximal_stable_sets", "omega", "parse_expr", "parse_graph6",
    "pendant_matching_theorem_check", "real_rooted", "render", "scan_h_family",
    "shape", "stable_count", "to_graph6", "vertex_count", "well_covered_expr",
]
