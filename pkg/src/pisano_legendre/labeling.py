"""Fibonacci-Legendre cordial (FLC) labelings.

A labeling is a bijection from vertex identities onto ``0 .. n-1``. An edge
``uv`` gets the induced value 1 when ``F_f(u) + F_f(v)`` is a nonzero quadratic
residue mod ``p`` and 0 otherwise; the labeling is cordial when the two edge
classes differ in size by at most one.

The ``label_*`` constructors build a graph together with a labeling that is
cordial whenever the matching existence theorem's hypotheses hold. They check
those hypotheses unless called with ``check=False``, and return a
:class:`Construction` holding the closed-form ``(e0, e1)`` predicted by the
counting argument, so callers can compare it with :func:`evaluate`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from . import graphs, kernels
from .graphs import Graph
from .numtheory import InitialPair, as_pair, classify, iter_fib_mod, legendre_symbol


class PreconditionError(ValueError):
    """A construction's hypotheses do not hold for the given input."""


@dataclass(frozen=True)
class VertexLabeling:
    graph: Graph
    assignment: tuple

    def __post_init__(self):
        assignment = tuple(int(x) for x in self.assignment)
        n = self.graph.order
        if len(assignment) != n or sorted(assignment) != list(range(n)):
            raise ValueError(f"assignment is not a bijection onto 0..{n - 1}")
        object.__setattr__(self, "assignment", assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]


@dataclass(frozen=True)
class EdgeLabelSummary:
    e0: int
    e1: int

    @property
    def cordial(self) -> bool:
        return abs(self.e0 - self.e1) <= 1

    @property
    def difference(self) -> int:
        return self.e0 - self.e1


@dataclass(frozen=True)
class Construction:
    """Result of a ``label_*`` constructor.

    ``predicted`` is the counting argument's ``(e0, e1)``; it is only
    guaranteed when the hypotheses were checked. ``epsilon`` is the inferred
    size offset for the corona and join constructions, else 0.
    """

    theorem: str
    labeling: VertexLabeling
    p: int
    pair: InitialPair
    k: int
    predicted: EdgeLabelSummary
    epsilon: int = 0


def _residues(p: int, pair, n: int) -> list[int]:
    return list(iter_fib_mod(pair, p, count=n))


def _edge_value(total: int, p: int, chi: dict) -> int:
    s = total % p
    if s == 0:
        return 0
    if s not in chi:
        chi[s] = legendre_symbol(s, p)
    return 1 if chi[s] == 1 else 0


def induced_edge_label(f: VertexLabeling, edge, p: int, pair) -> int:
    u, v = edge
    if not f.graph.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    hi = max(f[u], f[v]) + 1
    res = _residues(p, pair, hi)
    return _edge_value(res[f[u]] + res[f[v]], p, {})


def edge_labels(f: VertexLabeling, p: int, pair) -> list[int]:
    """Induced value of every edge, in the graph's canonical edge order."""
    res = _residues(p, pair, f.graph.order)
    chi = {}
    return [_edge_value(res[f[u]] + res[f[v]], p, chi) for u, v in f.graph.edges]


def evaluate(f: VertexLabeling, p: int, pair) -> EdgeLabelSummary:
    values = edge_labels(f, p, pair)
    e1 = sum(values)
    return EdgeLabelSummary(len(values) - e1, e1)


# --- constructive labelings --------------------------------------------------

def _zero_seed(pair) -> InitialPair:
    if isinstance(pair, int):
        pair = (0, pair)
    pair = as_pair(pair)
    if pair.a != 0:
        raise PreconditionError(f"construction needs a pair (0, b), got {pair}")
    return pair


def _require_zero_pl(rec) -> None:
    if rec.k != 0:
        raise PreconditionError(
            f"p={rec.p} is ({rec.k})-PL relative to {rec.pair}, requires 0-PL"
        )


def _require_mod8(p: int, why: str) -> None:
    if p % 8 not in (1, 7):
        raise PreconditionError(f"p={p} is {p % 8} mod 8; {why} requires p = +-1 (mod 8)")


def _require_q(q: int) -> None:
    if q < 1:
        raise PreconditionError(f"q must be >= 1, got {q}")


def _summary(zero_weight: int, one_weight: int) -> EdgeLabelSummary:
    return EdgeLabelSummary(zero_weight, one_weight)


def label_path(p: int, pair, q: int = 1, *, check: bool = True) -> Construction:
    """Identity labeling of ``P_{q*period + 1}`` for a 0-PL prime."""
    _require_q(q)
    rec = classify(p, pair)
    if check:
        _require_zero_pl(rec)
    g = graphs.path(q * rec.period + 1)
    f = VertexLabeling(g, tuple(range(g.order)))
    pred = _summary(q * (rec.l_minus + rec.l_zero), q * rec.l_plus)
    return Construction("path", f, p, rec.pair, rec.k, pred)


def label_star(p: int, pair, q: int = 1, *, check: bool = True) -> Construction:
    """Centre 0, leaves ``1 .. q*period``; needs a ``(0, b)`` pair."""
    _require_q(q)
    pair = _zero_seed(pair)
    rec = classify(p, pair)
    if check:
        _require_zero_pl(rec)
    g = graphs.star(q * rec.period + 1)
    f = VertexLabeling(g, tuple(range(g.order)))
    pred = _summary(q * (rec.l_minus + rec.l_zero), q * rec.l_plus)
    return Construction("star", f, p, pair, rec.k, pred)


def label_wheel(p: int, pair, q: int = 1, *, check: bool = True) -> Construction:
    _require_q(q)
    pair = _zero_seed(pair)
    rec = classify(p, pair)
    if check:
        _require_zero_pl(rec)
    g = graphs.wheel(q * rec.period + 1)
    f = VertexLabeling(g, tuple(range(g.order)))
    pred = _summary(2 * q * (rec.l_minus + rec.l_zero), 2 * q * rec.l_plus)
    return Construction("wheel", f, p, pair, rec.k, pred)


def label_cycle_product(
    p: int, pair, g: Graph, op: str, q: int = 1, *, check: bool = True
) -> Construction:
    """Label ``C_{q*period} (op) g`` by ``(u_j, v_i) -> j + i*q*period``.

    With the product layout of :mod:`graphs` that is the identity map.
    """
    _require_q(q)
    if op not in graphs.PRODUCTS:
        raise ValueError(f"unknown product {op!r}; expected one of {sorted(graphs.PRODUCTS)}")
    rec = classify(p, pair)
    if check:
        _require_zero_pl(rec)
        if op != "tensor":
            _require_mod8(p, f"the {op} product")
        if not g.is_connected():
            raise PreconditionError("g must be connected")
    h = graphs.PRODUCTS[op](graphs.cycle(q * rec.period), g)
    f = VertexLabeling(h, tuple(range(h.order)))
    n, m = g.order, g.size
    weight = {
        "lexicographic": m * q + n * n * q,
        "cartesian": m * q + n * q,
        "tensor": 2 * m * q,
        "strong": 3 * m * q + n * q,
    }[op]
    pred = _summary(weight * (rec.l_minus + rec.l_zero), weight * rec.l_plus)
    return Construction(f"product-{op}", f, p, rec.pair, rec.k, pred)


def _epsilon(size: int, base: int, order: int, lo: int) -> int:
    hi = comb(order, 2)
    if base + 1 < lo or base - 1 > hi:
        raise PreconditionError(
            f"size window [{base - 1}, {base + 1}] infeasible for simple graphs "
            f"of order {order} (allowed sizes {lo}..{hi})"
        )
    eps = size - base
    if eps not in (-1, 0, 1):
        raise PreconditionError(
            f"g has size {size}; needs a size in the window [{base - 1}, {base + 1}]"
        )
    return eps


def _period_at_least_two(rec) -> None:
    if rec.period < 2:
        raise PreconditionError(
            f"degenerate input: period {rec.period} of {rec.pair} mod {rec.p} "
            "gives order-0 graphs"
        )


def label_corona_path(p: int, pair, g: Graph, *, check: bool = True) -> Construction:
    """Label ``g o P_{period-1}`` by ``v_i^j -> i + j*period``."""
    pair = _zero_seed(pair)
    rec = classify(p, pair)
    k, per = rec.k, rec.period
    if per < 3:
        raise PreconditionError(f"period {per} is too short for this construction")
    n = g.order
    base = n * (2 * k - 1)
    if check:
        if k < 1:
            raise PreconditionError(f"p={p} is ({k})-PL relative to {pair}, requires k >= 1")
        if legendre_symbol(pair.b, p) != 1:
            raise PreconditionError(f"(F_1/p) = (F_2/p) = ({pair.b}/{p}) must be 1")
        if not g.is_connected():
            raise PreconditionError("g must be connected")
        eps = _epsilon(g.size, base, n, n - 1)
    else:
        eps = g.size - base
    h = graphs.corona(g, graphs.path(per - 1))
    assignment = tuple(j * per + i for j, i in h.names)
    f = VertexLabeling(h, assignment)
    pred = _summary(
        g.size + n * (2 * rec.l_minus + 2 * rec.l_zero - 1), n * (2 * rec.l_plus - 2)
    )
    return Construction("corona-path", f, p, pair, k, pred, eps)


def _block_labels(per: int):
    # base vertex j -> j*per; vertex i of block j -> (j + 1) + i*per
    return lambda j: j * per, lambda j, i: (j + 1) + i * per


def label_join(p: int, pair, g: Graph, hs, *, check: bool = True) -> Construction:
    """Label ``g + (h_1 u ... u h_{period-1})``.

    Needs ``period - 1`` graphs ``hs`` of order ``period - 1`` and common size
    ``m``. For ``k >= 0`` the required size of ``g`` exceeds what a simple
    graph of order ``period - 1`` can have, so checked calls always fail there.
    """
    pair = _zero_seed(pair)
    rec = classify(p, pair)
    k, per = rec.k, rec.period
    _period_at_least_two(rec)
    hs = list(hs)
    if len(hs) != per - 1:
        raise PreconditionError(f"need {per - 1} graphs in hs, got {len(hs)}")
    if any(h.order != per - 1 for h in hs):
        raise PreconditionError(f"every graph in hs must have order {per - 1}")
    sizes = {h.size for h in hs}
    if len(sizes) != 1:
        raise PreconditionError(f"graphs in hs must share one size, got {sorted(sizes)}")
    m = sizes.pop()
    if g.order != per - 1:
        raise PreconditionError(f"g must have order {per - 1}, got {g.order}")
    weight = m + (per - 1) ** 2
    base = (k + 1) * weight
    if check:
        if k < -1:
            raise PreconditionError(f"p={p} is ({k})-PL relative to {pair}, requires k >= -1")
        if m:
            _require_mod8(p, "a join with edges inside hs")
        eps = _epsilon(g.size, base, per - 1, 0)
    else:
        eps = g.size - base
    joined = graphs.join(g, graphs.union(hs))
    base_label, block_label = _block_labels(per)
    assignment = []
    for side, t in joined.names:
        if side == 0:
            assignment.append(base_label(t))
        else:
            j, i = divmod(t, per - 1)
            assignment.append(block_label(j, i))
    f = VertexLabeling(joined, tuple(assignment))
    pred = _summary(g.size + weight * (rec.l_minus + rec.l_zero - 1), weight * rec.l_plus)
    return Construction("join", f, p, pair, k, pred, eps)


def label_corona(p: int, pair, g: Graph, h: Graph, *, check: bool = True) -> Construction:
    """Label ``g o h`` with ``g`` and ``h`` both of order ``period - 1``."""
    pair = _zero_seed(pair)
    rec = classify(p, pair)
    k, per = rec.k, rec.period
    _period_at_least_two(rec)
    if h.order != per - 1:
        raise PreconditionError(f"h must have order {per - 1}, got {h.order}")
    if g.order != per - 1:
        raise PreconditionError(f"g must have order {per - 1}, got {g.order}")
    m = h.size
    weight = m + per - 1
    base = (k + 1) * weight
    if check:
        if k < -1:
            raise PreconditionError(f"p={p} is ({k})-PL relative to {pair}, requires k >= -1")
        if m:
            _require_mod8(p, "a corona with edges inside h")
        if not g.is_connected():
            raise PreconditionError("g must be connected")
        eps = _epsilon(g.size, base, per - 1, per - 2)
    else:
        eps = g.size - base
    cor = graphs.corona(g, h)
    base_label, block_label = _block_labels(per)
    assignment = tuple(base_label(j) if i == 0 else block_label(j, i - 1) for j, i in cor.names)
    f = VertexLabeling(cor, assignment)
    pred = _summary(g.size + weight * (rec.l_minus + rec.l_zero - 1), weight * rec.l_plus)
    return Construction("corona", f, p, pair, k, pred, eps)


# --- brute-force oracle ------------------------------------------------------

def _label_table(n: int, p: int, pair) -> list[int]:
    res = _residues(p, pair, n)
    chi = {}
    return [_edge_value(res[x] + res[y], p, chi) for x in range(n) for y in range(n)]


def _search_prefix(args):
    n, us, vs, table, prefix = args
    return kernels.first_cordial(n, us, vs, table, prefix)


def brute_force_flc_search(
    g: Graph, p: int, pair, cap: int = 9, workers: int = 1
) -> VertexLabeling | None:
    """First cordial labeling in lexicographic order of assignments, or None.

    With ``workers > 1`` the search is split by the label of vertex 0 and the
    smallest successful prefix wins, so the answer does not depend on
    ``workers``.
    """
    n = g.order
    if n > cap:
        raise ValueError(f"graph order {n} exceeds brute-force cap {cap}")
    as_pair(pair)
    table = _label_table(n, p, pair)
    us = [u for u, _ in g.edges]
    vs = [v for _, v in g.edges]
    if workers <= 1 or n < 2:
        found = kernels.first_cordial(n, us, vs, table)
    else:
        jobs = [(n, us, vs, table, first) for first in range(n)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = next((r for r in pool.map(_search_prefix, jobs) if r is not None), None)
    return None if found is None else VertexLabeling(g, found)


# --- serialization -----------------------------------------------------------

def labeling_to_json(f: VertexLabeling, p: int, pair) -> dict:
    pair = as_pair(pair)
    s = evaluate(f, p, pair)
    return {
        "graph": f.graph.to_json(),
        "assignment": list(f.assignment),
        "p": p,
        "a": pair.a,
        "b": pair.b,
        "e0": s.e0,
        "e1": s.e1,
        "cordial": s.cordial,
    }


def labeling_from_json(data: dict):
    """Return ``(labeling, p, pair, stored_summary_or_None)``."""
    g = Graph.from_json(data["graph"])
    f = VertexLabeling(g, tuple(data["assignment"]))
    stored = None
    if "e0" in data and "e1" in data:
        stored = EdgeLabelSummary(int(data["e0"]), int(data["e1"]))
    return f, int(data["p"]), InitialPair(int(data["a"]), int(data["b"])), stored
