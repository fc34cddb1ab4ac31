"""Graph expressions: a small DSL naming structured graphs without building them.

Grammar::

    expr := atom | INT "*" expr | "union(" expr ("," expr)* ")"
          | "join(" expr ("," expr)* ")" | "corona(" expr ")"
    atom := "K(" INT ")" | "P(" INT ")" | "C(" INT ")"
          | "KM(" part ("," part)* ")" | "g6(" STRING ")"
    part := INT | INT "^" INT

``q*e`` is the q-fold disjoint union of ``e`` and ``KM(4^1701)`` has 1701 parts
of size 4.  Nested unions (and nested joins) are flattened while parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby

from . import graph as G
from .graph import Graph
from .graph6 import parse_graph6, to_graph6


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class BudgetExceeded(RuntimeError):
    """Materialising an expression would exceed the vertex budget."""

    def __init__(self, needed: int, limit: int):
        super().__init__(f"expression has {needed} vertices, budget is {limit}")
        self.needed = needed
        self.limit = limit


class GraphExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Complete(GraphExpr):
    n: int


@dataclass(frozen=True)
class Path(GraphExpr):
    n: int


@dataclass(frozen=True)
class Cycle(GraphExpr):
    n: int


@dataclass(frozen=True)
class Multipartite(GraphExpr):
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Explicit(GraphExpr):
    graph: Graph


@dataclass(frozen=True)
class Union(GraphExpr):
    children: tuple[GraphExpr, ...]


@dataclass(frozen=True)
class Join(GraphExpr):
    children: tuple[GraphExpr, ...]


@dataclass(frozen=True)
class Corona(GraphExpr):
    child: GraphExpr


def validate(e: GraphExpr) -> GraphExpr:
    """Check size parameters and arities; return ``e`` unchanged."""
    if isinstance(e, Complete):
        if e.n < 0:
            raise ValueError("K(n) needs n >= 0")
    elif isinstance(e, Path):
        if e.n < 1:
            raise ValueError("P(n) needs n >= 1")
    elif isinstance(e, Cycle):
        if e.n < 3:
            raise ValueError("C(n) needs n >= 3")
    elif isinstance(e, Multipartite):
        if not e.parts or min(e.parts) < 1:
            raise ValueError("KM needs at least one part and positive part sizes")
    elif isinstance(e, (Union, Join)):
        if len(e.children) < 2:
            raise ValueError(f"{type(e).__name__.lower()} needs at least two children")
        for c in _distinct(e.children):
            validate(c)
    elif isinstance(e, Corona):
        validate(e.child)
    return e


def _distinct(children):
    seen = set()
    for c in children:
        if id(c) not in seen:
            seen.add(id(c))
            yield c


# -- convenience constructors ----------------------------------------------

def union(*children: GraphExpr) -> GraphExpr:
    flat = _flatten(Union, children)
    if len(flat) == 1:
        return flat[0]
    if not flat:
        return Complete(0)
    return Union(tuple(flat))


def join(*children: GraphExpr) -> GraphExpr:
    flat = _flatten(Join, children)
    if len(flat) == 1:
        return flat[0]
    if not flat:
        return Complete(0)
    return Join(tuple(flat))


def repeat(q: int, e: GraphExpr) -> GraphExpr:
    """q-fold disjoint union; ``repeat(0, e)`` is the empty graph."""
    if q < 0:
        raise ValueError("repeat count must be >= 0")
    return union(*([e] * q))


def _flatten(kind, children):
    flat = []
    for c in children:
        if isinstance(c, kind):
            flat.extend(c.children)
        else:
            flat.append(c)
    return flat


# -- structure queries -----------------------------------------------------

@lru_cache(maxsize=4096)
def vertex_count(e: GraphExpr) -> int:
    if isinstance(e, (Complete, Path, Cycle)):
        return e.n
    if isinstance(e, Multipartite):
        return sum(e.parts)
    if isinstance(e, Explicit):
        return e.graph.n
    if isinstance(e, (Union, Join)):
        return sum(vertex_count(c) for c in e.children)
    if isinstance(e, Corona):
        return 2 * vertex_count(e.child)
    raise TypeError(f"not a graph expression: {e!r}")


def expand(e: GraphExpr, limit: int = 10_000) -> Graph:
    """Materialise ``e``; raise :class:`BudgetExceeded` past ``limit`` vertices."""
    need = vertex_count(e)
    if need > limit:
        raise BudgetExceeded(need, limit)
    return _expand(e)


def _expand(e: GraphExpr) -> Graph:
    if isinstance(e, Complete):
        return G.complete(e.n)
    if isinstance(e, Path):
        return G.path(e.n)
    if isinstance(e, Cycle):
        return G.cycle(e.n)
    if isinstance(e, Multipartite):
        return G.multipartite(e.parts)
    if isinstance(e, Explicit):
        return e.graph
    if isinstance(e, Union):
        masks: list[int] = []
        for c in e.children:
            sub = _expand(c)
            off = len(masks)
            masks.extend(m << off for m in sub.masks)
        return Graph(len(masks), tuple(masks))
    if isinstance(e, Join):
        subs = [_expand(c) for c in e.children]
        total = sum(s.n for s in subs)
        full = G.full_mask(total)
        masks = []
        off = 0
        for s in subs:
            block = G.full_mask(s.n) << off
            outside = full ^ block
            masks.extend((m << off) | outside for m in s.masks)
            off += s.n
        return Graph(total, tuple(masks))
    if isinstance(e, Corona):
        return G.corona_k1(_expand(e.child))
    raise TypeError(f"not a graph expression: {e!r}")


# -- printer ---------------------------------------------------------------

def render(e: GraphExpr) -> str:
    """Inverse of :func:`parse_expr` (up to flattening of nested unions/joins)."""
    if isinstance(e, Complete):
        return f"K({e.n})"
    if isinstance(e, Path):
        return f"P({e.n})"
    if isinstance(e, Cycle):
        return f"C({e.n})"
    if isinstance(e, Multipartite):
        runs = [(size, len(list(grp))) for size, grp in groupby(e.parts)]
        return "KM(" + ",".join(str(s) if k == 1 else f"{s}^{k}" for s, k in runs) + ")"
    if isinstance(e, Explicit):
        return f'g6("{to_graph6(e.graph)}")'
    if isinstance(e, Union):
        runs = [(c, len(list(grp))) for c, grp in groupby(e.children)]
        if len(runs) == 1:
            c, k = runs[0]
            return f"{k}*{_render_factor(c)}"
        return "union(" + ",".join(render(c) if k == 1 else f"{k}*{_render_factor(c)}" for c, k in runs) + ")"
    if isinstance(e, Join):
        return "join(" + ",".join(render(c) for c in e.children) + ")"
    if isinstance(e, Corona):
        return f"corona({render(e.child)})"
    raise TypeError(f"not a graph expression: {e!r}")


def _render_factor(e: GraphExpr) -> str:
    # "3*4*K(2)" re-parses as a flattened 12-fold union
    return render(e)


# -- parser ----------------------------------------------------------------

_TOKEN = re.compile(r"""\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<str>"[^"]*"|'[^']*')|(?P<sym>[(),*^]))""")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ExprSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def int_(self, minimum: int, what: str) -> int:
        tok = self.take("int")
        v = int(tok[1])
        if v < minimum:
            raise ExprSyntaxError(f"{what} must be >= {minimum}, got {v}", tok[2])
        return v

    def expr(self) -> GraphExpr:
        kind, val, pos = self.peek()
        if kind == "int":
            q = self.int_(1, "repeat count")
            self.take("sym", "*")
            return repeat(q, self.expr())
        if kind != "name":
            raise ExprSyntaxError(f"expected an expression, found {val or 'end of input'!r}", pos)
        self.i += 1
        self.take("sym", "(")
        if val == "K":
            node: GraphExpr = Complete(self.int_(0, "K size"))
        elif val == "P":
            node = Path(self.int_(1, "P size"))
        elif val == "C":
            node = Cycle(self.int_(3, "C size"))
        elif val == "KM":
            parts = self.parts()
            node = Multipartite(tuple(parts))
        elif val == "g6":
            tok = self.take("str")
            try:
                node = Explicit(parse_graph6(tok[1][1:-1]))
            except ValueError as exc:
                raise ExprSyntaxError(f"bad graph6 literal: {exc}", tok[2]) from None
        elif val in ("union", "join"):
            children = [self.expr()]
            while self.peek()[1] == ",":
                self.i += 1
                children.append(self.expr())
            node = union(*children) if val == "union" else join(*children)
        elif val == "corona":
            node = Corona(self.expr())
        else:
            raise ExprSyntaxError(f"unknown constructor {val!r}", pos)
        self.take("sym", ")")
        return node

    def parts(self) -> list[int]:
        parts = []
        while True:
            size = self.int_(1, "part size")
            count = 1
            if self.peek()[1] == "^":
                self.i += 1
                count = self.int_(1, "part multiplicity")
            parts.extend([size] * count)
            if self.peek()[1] != ",":
                return parts
            self.i += 1


def parse_expr(text: str) -> GraphExpr:
    p = _Parser(text)
    e = p.expr()
    kind, val, pos = p.peek()
    if kind != "eof":
        raise ExprSyntaxError(f"trailing input {val!r}", pos)
    return e
