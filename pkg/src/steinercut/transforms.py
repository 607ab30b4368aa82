"""Facet-preserving operations on weighted Steiner graphs.

Subdivision and its inverse, gluing at a terminal and splitting at a cut
node, and the Y-Delta replacement of a degree-three nonterminal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    Graph,
    SteinerCutError,
    SteinerGraph,
    WeightedSteinerGraph,
    connected_components,
)
from .cuts import gamma
from .exactla import minimum_integer_form, scale_to_minimum_integer_form
from .facets import facet_status


class NodeNameClash(SteinerCutError):
    pass


class BadEdgeIndex(SteinerCutError):
    pass


class NotDegreeTwo(SteinerCutError):
    pass


class NotDegreeThree(SteinerCutError):
    pass


class IsTerminal(SteinerCutError):
    pass


class NotTerminal(SteinerCutError):
    pass


class NeighborsAdjacent(SteinerCutError):
    pass


class UnequalIncidentWeights(SteinerCutError):
    pass


class NotCutNode(SteinerCutError):
    pass


class NotFacetInducing(SteinerCutError):
    pass


@dataclass(frozen=True)
class TransformRecord:
    kind: str  # subdivide | reduce | glue | split | ydelta
    inputs: dict
    output: object  # WeightedSteinerGraph or a tuple of them
    details: dict = field(default_factory=dict)


def _make(nodes, edges, terminals, weights) -> WeightedSteinerGraph:
    return WeightedSteinerGraph(SteinerGraph(Graph(tuple(nodes), tuple(edges)), frozenset(terminals)),
                                tuple(weights))


def subdivide(wg: WeightedSteinerGraph, edge: int, new_node: str) -> WeightedSteinerGraph:
    """Replace edge ``uv`` by ``uw`` (same index) and ``wv`` (appended)."""
    g = wg.graph
    new_node = str(new_node)
    if new_node in g.index:
        raise NodeNameClash(f"node {new_node!r} already exists")
    if not isinstance(edge, int) or not 0 <= edge < g.m:
        raise BadEdgeIndex(f"no edge with index {edge!r}")
    u, v = g.edges[edge]
    edges = list(g.edges)
    edges[edge] = (u, new_node)
    edges.append((new_node, v))
    weights = list(wg.weights) + [wg.weights[edge]]
    return _make(g.nodes + (new_node,), edges, wg.terminals, weights)


def reduce(wg: WeightedSteinerGraph, w: str) -> WeightedSteinerGraph:
    """Suppress a degree-two nonterminal; exact inverse of :func:`subdivide`."""
    g = wg.graph
    w = str(w)
    if w not in g.index:
        raise SteinerCutError(f"unknown node {w!r}")
    if w in wg.terminals:
        raise IsTerminal(f"{w} is a terminal")
    inc = g.incident_edges(w)
    if len(inc) != 2:
        raise NotDegreeTwo(f"{w} has degree {len(inc)}")
    lo, hi = inc
    u = next(x for x in g.edges[lo] if x != w)
    v = next(x for x in g.edges[hi] if x != w)
    if g.has_edge(u, v):
        raise NeighborsAdjacent(f"{u} and {v} are adjacent")
    if wg.weights[lo] != wg.weights[hi]:
        raise UnequalIncidentWeights(f"c({u}{w}) != c({w}{v})")
    edges = list(g.edges)
    weights = list(wg.weights)
    edges[lo] = (u, v)
    del edges[hi]
    del weights[hi]
    nodes = tuple(x for x in g.nodes if x != w)
    return _make(nodes, edges, wg.terminals, weights)


def _fresh_name(name: str, taken: set) -> str:
    k = 2
    while f"{name}_{k}" in taken:
        k += 1
    return f"{name}_{k}"


def glue_with_map(wg1, wg2, w1, w2, keep_terminal: bool) -> tuple:
    """Glue and also return the renaming applied to the nodes of ``wg2``."""
    w1, w2 = str(w1), str(w2)
    if w1 not in wg1.terminals:
        raise NotTerminal(f"{w1} is not a terminal of the first graph")
    if w2 not in wg2.terminals:
        raise NotTerminal(f"{w2} is not a terminal of the second graph")
    taken = set(wg1.graph.nodes)
    rename = {w2: w1}
    for v in wg2.graph.nodes:
        if v == w2:
            continue
        name = v if v not in taken else _fresh_name(v, taken | set(wg2.graph.nodes))
        rename[v] = name
        taken.add(name)
    nodes = list(wg1.graph.nodes) + [rename[v] for v in wg2.graph.nodes if v != w2]
    edges = list(wg1.graph.edges) + [(rename[a], rename[b]) for a, b in wg2.graph.edges]
    g1, g2 = gamma(wg1), gamma(wg2)
    raw = [g2 * c for c in wg1.weights] + [g1 * c for c in wg2.weights]
    weights = minimum_integer_form(raw)
    terms = set(wg1.terminals) | {rename[t] for t in wg2.terminals}
    if not keep_terminal:
        terms.discard(w1)
    return _make(nodes, edges, terms, weights), rename


def glue(wg1: WeightedSteinerGraph, wg2: WeightedSteinerGraph, w1: str, w2: str,
         keep_terminal: bool) -> WeightedSteinerGraph:
    """Identify terminal ``w1`` of ``wg1`` with terminal ``w2`` of ``wg2``.

    Weights are the minimum integer form of ``(gamma2 * c1, gamma1 * c2)``.
    """
    return glue_with_map(wg1, wg2, w1, w2, keep_terminal)[0]


def _piece(wg: WeightedSteinerGraph, part: set, w: str) -> WeightedSteinerGraph:
    g = wg.graph
    keep = [i for i, (a, b) in enumerate(g.edges) if a in part and b in part]
    nodes = [v for v in g.nodes if v in part]
    weights = minimum_integer_form([wg.weights[i] for i in keep])
    terms = (set(wg.terminals) & part) | {w}
    return _make(nodes, [g.edges[i] for i in keep], terms, weights)


def split_at_cut_node(wg: WeightedSteinerGraph, w: str) -> tuple:
    """Split off the component of G - w holding the smallest node name.

    Returns two weighted Steiner graphs, both with ``w`` as a terminal.
    """
    g = wg.graph
    w = str(w)
    if w not in g.index:
        raise SteinerCutError(f"unknown node {w!r}")
    comps = connected_components(g, {w})
    if len(comps) < 2:
        raise NotCutNode(f"{w} is not a cut node")
    first = min(comps, key=min)
    part1 = set(first) | {w}
    part2 = (set(g.nodes) - set(first)) | {w}
    return _piece(wg, part1, w), _piece(wg, part2, w)


def split_fully(wg: WeightedSteinerGraph, w: str) -> list:
    """Split at ``w`` until ``w`` is a cut node of no piece."""
    pieces = []
    rest = wg
    while len(connected_components(rest.graph, {str(w)})) > 1:
        first, rest = split_at_cut_node(rest, w)
        pieces.append(first)
    pieces.append(rest)
    return pieces


@dataclass(frozen=True)
class YDeltaResult:
    raw: WeightedSteinerGraph  # weights exactly as in the replacement formula
    raw_gamma: Fraction
    normalized: WeightedSteinerGraph
    normalized_gamma: Fraction
    zetas: tuple
    inserted: tuple  # indices of the triangle edges in the output


def ydelta(wg: WeightedSteinerGraph, v: str) -> YDeltaResult:
    """Replace the degree-three nonterminal ``v`` by (part of) its opposite triangle.

    With ``zeta_i = c(delta(v)) - 2 c(e_i)``, the edge ``f_i`` joining the two
    other neighbours gains ``zeta_i / 2`` when ``zeta_i > 0``.
    """
    g = wg.graph
    v = str(v)
    if v not in g.index:
        raise SteinerCutError(f"unknown node {v!r}")
    if v in wg.terminals:
        raise IsTerminal(f"{v} is a terminal")
    inc = g.incident_edges(v)
    if len(inc) != 3:
        raise NotDegreeThree(f"{v} has degree {len(inc)}")
    ok, why = facet_status(wg)
    if not ok:
        raise NotFacetInducing(f"input is not facet inducing: {why}")
    nbrs = [next(x for x in g.edges[i] if x != v) for i in inc]
    ce = [wg.weights[i] for i in inc]
    star = sum(ce)
    zetas = tuple(star - 2 * c for c in ce)
    if any(z < 0 for z in zetas):
        raise NotFacetInducing("incident weights violate the triangle inequality")

    keep = [i for i in range(g.m) if i not in inc]
    edges = [g.edges[i] for i in keep]
    weights = [wg.weights[i] for i in keep]
    pos = {frozenset(e): k for k, e in enumerate(edges)}
    inserted = []
    for i in range(3):
        if zetas[i] == 0:
            continue
        a, b = (nbrs[j] for j in range(3) if j != i)
        key = frozenset((a, b))
        if key in pos:
            weights[pos[key]] += zetas[i] / 2
        else:
            pos[key] = len(edges)
            edges.append((a, b))
            weights.append(zetas[i] / 2)
        inserted.append(pos[key])
    nodes = [x for x in g.nodes if x != v]
    raw = _make(nodes, edges, wg.terminals, weights)
    raw_gamma = gamma(raw)
    norm_w, norm_gamma = scale_to_minimum_integer_form(weights, raw_gamma)
    normalized = _make(nodes, edges, wg.terminals, norm_w)
    return YDeltaResult(raw, raw_gamma, normalized, norm_gamma, zetas, tuple(inserted))


def edge_weight_map(wg: WeightedSteinerGraph) -> dict:
    """Order-free view ``{frozenset(edge): weight}`` used for round-trip checks."""
    return {frozenset(e): c for e, c in zip(wg.graph.edges, wg.weights)}


def same_up_to_scaling(a: WeightedSteinerGraph, b: WeightedSteinerGraph) -> bool:
    """Equal node sets, terminals and normalized edge weights (edge order free)."""
    if set(a.graph.nodes) != set(b.graph.nodes) or a.terminals != b.terminals:
        return False
    ma, mb = edge_weight_map(a), edge_weight_map(b)
    if set(ma) != set(mb):
        return False
    keys = sorted(ma, key=sorted)
    return minimum_integer_form([ma[k] for k in keys]) == minimum_integer_form([mb[k] for k in keys])


def apply(kind: str, wg: WeightedSteinerGraph, **kw) -> TransformRecord:
    """Run one operation and wrap the result in a :class:`TransformRecord`."""
    details = {}
    if kind == "subdivide":
        out = subdivide(wg, kw["edge"], kw["new_node"])
    elif kind == "reduce":
        out = reduce(wg, kw["node"])
    elif kind == "glue":
        out, rename = glue_with_map(wg, kw["other"], kw["node"], kw["other_node"], kw["keep_terminal"])
        details["rename"] = rename
    elif kind == "split":
        out = split_at_cut_node(wg, kw["node"])
    elif kind == "ydelta":
        res = ydelta(wg, kw["node"])
        out = res.raw
        details.update(raw_gamma=res.raw_gamma, normalized=res.normalized,
                       normalized_gamma=res.normalized_gamma, zetas=res.zetas)
    else:
        raise SteinerCutError(f"unknown transform {kind!r}")
    inputs = {k: v for k, v in kw.items() if k != "other"}
    return TransformRecord(kind, inputs, out, details)
