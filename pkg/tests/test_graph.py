import random
import pytest

from indpoly import graph as G
from indpoly.graph import Graph
from indpoly.named import k4_minus_e, tree_t2
from indpoly.engine import indpoly_bruteforce

from conftest import random_graph


def brute_alpha(g):
    # largest subset in the exhaustive stable-set enumeration
    return indpoly_bruteforce(g).degree


def test_complete():
    assert (G.complete(1).n, G.complete(1).edge_count) == (1, 0)
    assert (G.complete(4).n, G.complete(4).edge_count) == (4, 6)
    assert G.complete(0).n == 0


def test_multipartite():
    g = G.multipartite([3, 3, 3])
    assert (g.n, g.edge_count) == (9, 27)
    assert G.multipartite([1, 1]) == G.complete(2)
    assert G.multipartite([4] * 1701).n == 6804
    with pytest.raises(ValueError):
        G.multipartite([])
    with pytest.raises(ValueError):
        G.multipartite([2, 0])


def test_path_cycle():
    assert G.path(2) == G.complete(2)
    c7 = G.cycle(7)
    assert (c7.n, c7.edge_count) == (7, 7)
    assert G.is_isomorphic(G.path(4), G.corona_k1(G.complete(2)))
    with pytest.raises(ValueError):
        G.cycle(2)


def test_union_and_join():
    u = G.disjoint_union(G.complete(1), G.complete(1))
    assert (u.n, u.edge_count) == (2, 0)
    u = G.disjoint_union(G.complete(3), G.complete(4))
    assert (u.n, u.edge_count) == (7, 9)
    assert G.zykov_sum(G.complete(1), G.complete(1)) == G.complete(2)
    assert G.zykov_sum(G.complete(2), G.complete(3)) == G.complete(5)


def test_alpha_of_union_and_join_random():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 10))
        h = random_graph(rng, rng.randint(1, 10))
        assert brute_alpha(G.disjoint_union(g, h)) == brute_alpha(g) + brute_alpha(h)
        assert brute_alpha(G.zykov_sum(g, h)) == max(brute_alpha(g), brute_alpha(h))


def test_corona():
    assert G.corona_k1(G.complete(1)) == G.complete(2)
    assert G.is_isomorphic(G.corona_k1(G.complete(2)), G.path(4))
    t2 = G.corona_k1(G.multipartite([1, 3]))
    assert indpoly_bruteforce(t2) == [1, 8, 21, 23, 9]
    assert G.is_isomorphic(t2, tree_t2())


def test_complement():
    assert G.complement(G.complete(5)).edge_count == 0
    assert G.is_isomorphic(G.complement(G.cycle(5)), G.cycle(5))
    assert G.complement(k4_minus_e()).edge_count == 1


def test_deletions():
    assert G.delete_vertex(G.complete(3), 0) == G.complete(2)
    assert G.delete_closed_neighborhood(G.complete(3), 0).n == 0
    assert G.delete_closed_neighborhood(G.path(4), 1) == G.complete(1)
    with pytest.raises(IndexError):
        G.delete_vertex(G.complete(3), 3)


def test_invariants_randomized():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 9))
        h = random_graph(rng, rng.randint(0, 9))
        u, j = G.disjoint_union(g, h), G.zykov_sum(g, h)
        c, k = G.complement(g), G.corona_k1(g)
        for x in (g, u, j, c, k):
            x.check()
        assert u.n == g.n + h.n and u.edge_count == g.edge_count + h.edge_count
        assert j.edge_count == g.edge_count + h.edge_count + g.n * h.n
        assert G.complement(c) == g
        assert k.n == 2 * g.n and k.edge_count == g.edge_count + g.n


def test_check_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0)).check()
    with pytest.raises(ValueError):
        Graph(1, (0b1,)).check()
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_girth_and_components():
    assert G.girth(G.path(5)) is None
    assert G.girth(G.cycle(7)) == 7
    assert G.girth(G.complete(4)) == 3
    assert G.girth(G.multipartite([2, 2])) == 4
    assert len(G.disjoint_union(G.cycle(3), G.path(2)).components()) == 2


def test_claw_free():
    assert not G.claw_free(G.multipartite([1, 3]))
    assert G.claw_free(G.cycle(7))
    assert G.claw_free(G.complete(5))


def test_isomorphism_negative():
    assert not G.is_isomorphic(G.path(4), G.multipartite([1, 3]))
    assert not G.is_isomorphic(G.cycle(6), G.disjoint_union(G.cycle(3), G.cycle(3)))
