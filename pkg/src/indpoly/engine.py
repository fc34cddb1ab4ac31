"""Independence polynomials by three independent routes.

* :func:`indpoly_bruteforce` enumerates every vertex subset (the oracle).
* :func:`indpoly_branch` uses ``I(G) = I(G - v) + x * I(G - N[v])`` on a
  maximum-degree pivot, multiplies over connected components and memoises on
  the bitmask of surviving vertices.
* :func:`indpoly_expr` evaluates a :class:`GraphExpr` symbolically with the
  union (product) and join (sum minus one) rules.
"""

from __future__ import annotations

import random
import sys
from collections import Counter
from itertools import combinations

from .expr import (
    Complete,
    Corona,
    Cycle,
    Explicit,
    GraphExpr,
    Join,
    Multipartite,
    Path,
    Union,
    expand,
)
from .graph import Graph, bits, components_in, full_mask
from .poly import Polynomial, binomial_power, mul, power

BRUTEFORCE_LIMIT = 30
DEFAULT_BUDGET = 10_000


class Cancelled(RuntimeError):
    """The branching engine hit its work limit; the caller may retry larger."""


def indpoly_bruteforce(g: Graph) -> Polynomial:
    if g.n > BRUTEFORCE_LIMIT:
        raise ValueError(f"brute force is limited to {BRUTEFORCE_LIMIT} vertices, got {g.n}")
    counts = [0] * (g.n + 1)
    masks = g.masks
    # grow the list of stable subsets of {0..v-1} one vertex at a time
    stable = [0]
    for v in range(g.n):
        stable += [s | 1 << v for s in stable if not s & masks[v]]
    for s in stable:
        counts[s.bit_count()] += 1
    return Polynomial(counts)


class MemoCache(dict):
    """Bitmask of surviving root vertices -> independence polynomial."""


def indpoly_branch(g: Graph, cache: MemoCache | None = None, max_calls: int | None = None) -> Polynomial:
    memo = MemoCache() if cache is None else cache
    masks = g.masks
    calls = 0

    def solve(alive: int) -> tuple[int, ...]:
        nonlocal calls
        hit = memo.get(alive)
        if hit is not None:
            return hit
        calls += 1
        if max_calls is not None and calls > max_calls:
            raise Cancelled(f"branching exceeded {max_calls} calls")
        comps = components_in(masks, alive)
        if len(comps) > 1:
            result = (1,)
            for c in comps:
                result = _mul(result, solve(c))
        else:
            result = _connected(alive)
        memo[alive] = result
        return result

    def _connected(alive: int) -> tuple[int, ...]:
        size = alive.bit_count()
        if size == 1:
            return (1, 1)
        best, best_deg = -1, -1
        edges2 = 0
        for v in bits(alive):
            d = (masks[v] & alive).bit_count()
            edges2 += d
            if d > best_deg:
                best, best_deg = v, d
        if edges2 == size * (size - 1):
            return (1, size)
        without = solve(alive & ~(1 << best))
        rest = solve(alive & ~(masks[best] | 1 << best))
        out = list(without) + [0] * (len(rest) + 1 - len(without))
        for k, c in enumerate(rest):
            out[k + 1] += c
        return tuple(out)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 1000))
    try:
        return Polynomial(solve(full_mask(g.n)))
    finally:
        sys.setrecursionlimit(limit)


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def audit_cache(g: Graph, cache: MemoCache, samples: int, rng: random.Random) -> int:
    """Re-derive ``samples`` random cache entries by brute force; return how many were checked."""
    keys = [k for k in cache if k.bit_count() <= BRUTEFORCE_LIMIT]
    keys.sort()
    checked = 0
    for key in rng.sample(keys, min(samples, len(keys))):
        expected = indpoly_bruteforce(g.induced(key))
        if Polynomial(cache[key]) != expected:
            raise AssertionError(f"memo entry {key:#x} disagrees with brute force")
        checked += 1
    return checked


def indpoly(g: Graph) -> Polynomial:
    return indpoly_branch(g)


def stable_count(g: Graph, k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    return indpoly_branch(g)[k]


def stable_sets(g: Graph, k: int):
    """Every stable set of size ``k`` (as sorted tuples), by plain enumeration."""
    for combo in combinations(range(g.n), k):
        if all(not g.has_edge(u, v) for u, v in combinations(combo, 2)):
            yield combo


# -- symbolic evaluation ---------------------------------------------------

def complete_poly(n: int) -> Polynomial:
    return Polynomial((1, n))


def multipartite_poly(parts) -> Polynomial:
    """``1 + sum((1 + x)**p - 1)`` over the parts."""
    total = Polynomial.const(1)
    for size, count in Counter(parts).items():
        total = total + (binomial_power(1, 1, size) - 1) * count
    return total


def indpoly_expr(e: GraphExpr, budget: int = DEFAULT_BUDGET) -> Polynomial:
    return _Evaluator(budget).eval(e)


class _Evaluator:
    def __init__(self, budget: int):
        self.budget = budget
        self.memo: dict[GraphExpr, Polynomial] = {}

    def eval(self, e: GraphExpr) -> Polynomial:
        hit = self.memo.get(e)
        if hit is None:
            hit = self.memo[e] = self._eval(e)
        return hit

    def _eval(self, e: GraphExpr) -> Polynomial:
        if isinstance(e, Complete):
            return complete_poly(e.n)
        if isinstance(e, Multipartite):
            return multipartite_poly(e.parts)
        if isinstance(e, Union):
            result = Polynomial.const(1)
            for child, count in Counter(e.children).items():
                result = mul(result, power(self.eval(child), count))
            return result
        if isinstance(e, Join):
            result = Polynomial.const(1)
            for child, count in Counter(e.children).items():
                result = result + (self.eval(child) - 1) * count
            return result
        if isinstance(e, (Path, Cycle, Explicit, Corona)):
            return indpoly_branch(expand(e, self.budget))
        raise TypeError(f"not a graph expression: {e!r}")
