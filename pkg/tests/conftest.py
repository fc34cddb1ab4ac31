import random
from itertools import combinations
from pathlib import Path

import pytest

from indpoly import graph as G
from indpoly.expr import Complete, Corona, Cycle, Multipartite, Path as PathE, join, repeat, union, vertex_count
from indpoly.graph import Graph
from indpoly.poly import Polynomial, is_log_concave, mul

DATA = Path(__file__).parent / "data"

# PASS/FAIL lines from test_acceptance, printed after the run
ACCEPTANCE_RESULTS: list[str] = []


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n: int):
    """Every labelled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def small_corpus():
    """All labelled graphs on <= 5 vertices plus the 156 unlabelled 6-vertex graphs."""
    from indpoly.graph6 import parse_graph6

    out = []
    for n in range(0, 6):
        out.extend(all_graphs(n))
    out.extend(parse_graph6(line) for line in (DATA / "graphs6.g6").read_text().split())
    return out


def random_corpus(seed: int, count: int, lo: int, hi: int):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(lo, hi)) for _ in range(count)]


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_girth6(rng: random.Random, n: int, extra: int) -> Graph:
    """Random tree plus edges that close only cycles of length >= 6."""
    g = random_tree(rng, n)
    edges = set(g.edges())
    for _ in range(extra * 4):
        if extra == 0:
            break
        u, v = rng.sample(range(n), 2)
        cand = Graph.from_edges(n, edges | {(min(u, v), max(u, v))})
        gi = G.girth(cand)
        if gi is None or gi >= 6:
            edges.add((min(u, v), max(u, v)))
            extra -= 1
    return Graph.from_edges(n, edges)


def random_expr(rng: random.Random, max_vertices: int = 16, depth: int = 3):
    """Random expression with at most ``max_vertices`` vertices."""
    while True:
        e = _random_expr(rng, depth)
        if 1 <= vertex_count(e) <= max_vertices:
            return e


def _random_expr(rng, depth):
    leaves = ["K", "P", "C", "KM"]
    kind = rng.choice(leaves + ["union", "join", "corona", "rep"] * 2 if depth else leaves)
    if kind == "K":
        return Complete(rng.randint(0, 3))
    if kind == "P":
        return PathE(rng.randint(1, 4))
    if kind == "C":
        return Cycle(rng.randint(3, 5))
    if kind == "KM":
        return Multipartite(tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 3))))
    if kind == "corona":
        return Corona(_random_expr(rng, depth - 1))
    if kind == "rep":
        return repeat(rng.randint(2, 3), _random_expr(rng, depth - 1))
    kids = [_random_expr(rng, depth - 1) for _ in range(rng.randint(2, 3))]
    return union(*kids) if kind == "union" else join(*kids)


def random_log_concave(rng):
    # products of positive-root linear factors are real-rooted, hence log-concave;
    # geometric-like perturbations add non-real-rooted log-concave cases
    if rng.random() < 0.5:
        p = Polynomial([1])
        for _ in range(rng.randint(1, 5)):
            p = mul(p, Polynomial([rng.randint(1, 9), rng.randint(1, 9)]))
        return p
    while True:
        seq = [rng.randint(1, 30)]
        ratio = rng.uniform(0.5, 3)
        for _ in range(rng.randint(1, 6)):
            ratio *= rng.uniform(0.3, 1.0)
            seq.append(max(1, int(seq[-1] * ratio)))
        if is_log_concave(seq):
            return Polynomial(seq)


def random_unimodal(rng):
    k = rng.randint(1, 7)
    up = sorted(rng.randint(1, 100) for _ in range(k))
    down = sorted((rng.randint(1, up[-1]) for _ in range(rng.randint(0, 5))), reverse=True)
    return Polynomial(up + down)


@pytest.fixture
def rng():
    return random.Random(20021)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(line)
