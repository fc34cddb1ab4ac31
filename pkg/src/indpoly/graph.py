"""Explicit simple graphs backed by integer bitmasks.

Vertex ``v`` of a :class:`Graph` on ``n`` vertices is bit ``v``; ``masks[v]``
holds the neighbourhood of ``v``.  Graphs are immutable.  Operators place
the left operand's vertices first so vertex numbering is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class Graph:
    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if len(self.masks) != self.n:
            raise ValueError(f"expected {self.n} adjacency masks, got {len(self.masks)}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    # -- queries -----------------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.masks[v]))

    @property
    def adj(self) -> list[frozenset[int]]:
        return [self.neighbors(v) for v in range(self.n)]

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.masks[u] >> (u + 1) << (u + 1))]

    def check(self) -> None:
        """Raise ``ValueError`` unless the adjacency is loop-free and symmetric."""
        for v, m in enumerate(self.masks):
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if m >> self.n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            for u in bits(m):
                if not self.masks[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}->{u}")

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by lowest vertex."""
        return components_in(self.masks, full_mask(self.n))

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, keep: int) -> "Graph":
        """Induced subgraph on the vertex bitmask ``keep``, indices compacted."""
        order = list(bits(keep))
        index = {v: i for i, v in enumerate(order)}
        masks = []
        for v in order:
            m = 0
            for u in bits(self.masks[v] & keep):
                m |= 1 << index[u]
            masks.append(m)
        return Graph(len(order), tuple(masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def components_in(masks, alive: int) -> list[int]:
    comps = []
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= masks[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


# -- constructors ----------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete graph needs n >= 0")
    full = full_mask(n)
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def multipartite(parts: Iterable[int]) -> Graph:
    parts = list(parts)
    if not parts:
        raise ValueError("multipartite graph needs at least one part")
    if any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be positive, got {parts}")
    total = sum(parts)
    full = full_mask(total)
    masks = []
    start = 0
    for p in parts:
        block = full_mask(p) << start
        masks.extend([full ^ block] * p)
        start += p
    return Graph(total, tuple(masks))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.masks + tuple(m << g.n for m in h.masks))


def zykov_sum(g: Graph, h: Graph) -> Graph:
    left = full_mask(g.n)
    right = full_mask(h.n) << g.n
    return Graph(
        g.n + h.n,
        tuple(m | right for m in g.masks) + tuple((m << g.n) | left for m in h.masks),
    )


join = zykov_sum


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant vertex ``n + i`` to every vertex ``i``."""
    n = g.n
    masks = tuple(m | (1 << (n + i)) for i, m in enumerate(g.masks))
    return Graph(2 * n, masks + tuple(1 << i for i in range(n)))


def complement(g: Graph) -> Graph:
    full = full_mask(g.n)
    return Graph(g.n, tuple(full ^ m ^ (1 << v) for v, m in enumerate(g.masks)))


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return g.induced(full_mask(g.n) & ~(1 << v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return g.induced(full_mask(g.n) & ~(g.masks[v] | 1 << v))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for {g.n} vertices")


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test with degree-sequence pruning (small graphs only)."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    n = g.n
    gdeg = [g.degree(v) for v in range(n)]
    hdeg = [h.degree(v) for v in range(n)]
    image = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, image[u]) for u in range(v)):
                image[v] = w
                used |= 1 << w
                if extend(v + 1):
                    return True
                used &= ~(1 << w)
        return False

    return extend(0)


def claw_free(g: Graph) -> bool:
    """True when no vertex has three pairwise non-adjacent neighbours."""
    for v in range(g.n):
        nbrs = list(bits(g.masks[v]))
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    adj = [list(bits(m)) for m in g.masks]
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best
