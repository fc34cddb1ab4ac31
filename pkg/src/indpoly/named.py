"""Small named graphs used as fixtures and examples."""

from .graph import Graph, complete

# The two trees, laid out on a grid: rows bottom, middle, top.
T1_EDGES = [(0, 1), (4, 5), (5, 6), (6, 7), (8, 9), (1, 5), (5, 9), (2, 6), (3, 7)]
T2_EDGES = [(0, 1), (3, 4), (4, 5), (6, 7), (1, 4), (4, 7), (2, 5)]


def tree_t1() -> Graph:
    return Graph.from_edges(10, T1_EDGES)


def tree_t2() -> Graph:
    return Graph.from_edges(8, T2_EDGES)


def k4_minus_e() -> Graph:
    """K_4 without the edge {0, 1}."""
    k = complete(4)
    return Graph.from_edges(4, [e for e in k.edges() if e != (0, 1)])
