"""Immutable simple graphs, the named families, and graph operations.

Vertices are identities ``0 .. n-1``. Each graph also carries a tuple of names,
one per identity, that records where a vertex came from:

* families: the plain index;
* ``union`` (and each side of ``join``): ``(copy, local identity)``;
* ``corona``: ``(j, 0)`` for base vertex ``j`` and ``(j, i + 1)`` for vertex
  ``i`` of the ``j``-th attached copy;
* products: ``(x, y)`` with ``x`` from the first factor, ``y`` from the second,
  stored at identity ``x + y * n1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple
    names: tuple = None
    _edge_set: frozenset = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        n = self.order
        if n < 0:
            raise ValueError("order must be non-negative")
        canon = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            edge = (u, v) if u < v else (v, u)
            if edge in canon:
                raise ValueError(f"parallel edge {edge}")
            canon.add(edge)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "_edge_set", frozenset(canon))
        names = tuple(range(n)) if self.names is None else tuple(self.names)
        if len(names) != n:
            raise ValueError("need exactly one name per vertex")
        if len(set(names)) != n:
            raise ValueError("vertex names must be unique")
        object.__setattr__(self, "names", names)

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbours(self) -> list[list[int]]:
        adj = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        adj = self.neighbours()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def index_of(self, name) -> int:
        return self.names.index(name)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "names": [_name_to_json(x) for x in self.names],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        names = data.get("names")
        if names is not None:
            names = [_name_from_json(x) for x in names]
        return cls(int(data["order"]), tuple(tuple(e) for e in data["edges"]), names)


def _name_to_json(name):
    if isinstance(name, tuple):
        return [_name_to_json(x) for x in name]
    return name


def _name_from_json(name):
    if isinstance(name, list):
        return tuple(_name_from_json(x) for x in name)
    return name


# --- families ---------------------------------------------------------------

def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    return Graph(n, ())


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """Centre is vertex 0, leaves ``1 .. n-1``."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def wheel(n: int) -> Graph:
    """Hub is vertex 0; the rim ``1 .. n-1`` is a cycle in index order."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = n - 1
    spokes = [(0, i) for i in range(1, n)]
    ring = [(i, i % rim + 1) for i in range(1, n)]
    return Graph(n, tuple(spokes + ring))


# --- operations -------------------------------------------------------------

def union(gs) -> Graph:
    """Disjoint union; copy ``j`` is shifted by the orders of copies before it."""
    gs = list(gs)
    if not gs:
        raise ValueError("union of an empty list")
    edges, names, offset = [], [], 0
    for j, g in enumerate(gs):
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        names.extend((j, i) for i in range(g.order))
        offset += g.order
    return Graph(offset, tuple(edges), names)


def join(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.order
    edges = list(g1.edges)
    edges.extend((u + n1, v + n1) for u, v in g2.edges)
    edges.extend((u, n1 + v) for u in range(n1) for v in range(g2.order))
    names = [(0, i) for i in range(n1)] + [(1, i) for i in range(g2.order)]
    return Graph(n1 + g2.order, tuple(edges), names)


def corona(g1: Graph, g2: Graph) -> Graph:
    """Copy ``j`` of ``g2`` occupies identities ``n1 + j*n2 ..``."""
    n1, n2 = g1.order, g2.order
    edges = list(g1.edges)
    names = [(j, 0) for j in range(n1)]
    for j in range(n1):
        base = n1 + j * n2
        edges.extend((u + base, v + base) for u, v in g2.edges)
        edges.extend((j, base + i) for i in range(n2))
        names.extend((j, i + 1) for i in range(n2))
    return Graph(n1 * (1 + n2), tuple(edges), names)


def _ident(n1: int, x: int, y: int) -> int:
    return x + y * n1


def _product_graph(g1: Graph, g2: Graph, edges) -> Graph:
    n1, n2 = g1.order, g2.order
    names = [(x, y) for y in range(n2) for x in range(n1)]
    return Graph(n1 * n2, tuple(edges), names)


def _fibre_edges(g1: Graph, g2: Graph):
    # (x, y1)(x, y2) for every vertex x of g1 and edge y1y2 of g2
    n1 = g1.order
    return [(_ident(n1, x, y1), _ident(n1, x, y2)) for x in range(n1) for y1, y2 in g2.edges]


def _tensor_edges(g1: Graph, g2: Graph):
    n1 = g1.order
    out = []
    for x1, x2 in g1.edges:
        for y1, y2 in g2.edges:
            out.append((_ident(n1, x1, y1), _ident(n1, x2, y2)))
            out.append((_ident(n1, x1, y2), _ident(n1, x2, y1)))
    return out


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.order, g2.order
    edges = _fibre_edges(g1, g2)
    for x1, x2 in g1.edges:
        edges.extend(
            (_ident(n1, x1, y1), _ident(n1, x2, y2)) for y1 in range(n2) for y2 in range(n2)
        )
    return _product_graph(g1, g2, edges)


def cartesian(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.order
    edges = _fibre_edges(g1, g2)
    edges.extend(
        (_ident(n1, x1, y), _ident(n1, x2, y)) for y in range(g2.order) for x1, x2 in g1.edges
    )
    return _product_graph(g1, g2, edges)


def tensor(g1: Graph, g2: Graph) -> Graph:
    return _product_graph(g1, g2, _tensor_edges(g1, g2))


def strong(g1: Graph, g2: Graph) -> Graph:
    return _product_graph(g1, g2, cartesian(g1, g2).edges + tuple(_tensor_edges(g1, g2)))


PRODUCTS = {
    "lexicographic": lexicographic,
    "cartesian": cartesian,
    "tensor": tensor,
    "strong": strong,
}


def connected_graph(n: int, m: int, seed: int = 0) -> Graph:
    """Seeded random connected graph with ``n`` vertices and ``m`` edges.

    A random spanning tree is grown first, then ``m - (n - 1)`` of the
    remaining vertex pairs are sampled.
    """
    if n < 1 or not (n - 1 <= m <= n * (n - 1) // 2):
        raise ValueError(f"no connected simple graph with order {n} and size {m}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    tree = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        tree.add((min(u, v), max(u, v)))
    rest = [e for e in combinations(range(n), 2) if e not in tree]
    extra = rng.sample(rest, m - (n - 1))
    return Graph(n, tuple(sorted(tree)) + tuple(extra))
