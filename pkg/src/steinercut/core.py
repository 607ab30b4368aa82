"""Graphs, Steiner graphs, cuts and incidence vectors.

Every weight in the package is a :class:`fractions.Fraction`; there is no
floating point path.  Nodes are opaque strings and the position of an edge in
``Graph.edges`` is its coordinate in every edge-space vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Rational = Fraction
EdgeVector = tuple  # tuple[Fraction, ...], one entry per edge index


class SteinerCutError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraph(SteinerCutError):
    pass


class InvalidCutSet(SteinerCutError):
    pass


class GuardExceeded(SteinerCutError):
    """An instance is larger than a brute-force routine accepts."""


TooLarge = GuardExceeded


def parse_rational(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (ints and Fractions pass through)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise InvalidGraph(f"weight must be a rational string, got {text!r}")
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise InvalidGraph(f"weight must be 'p' or 'p/q', got {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidGraph(f"bad rational {text!r}") from exc


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with a fixed node and edge order."""

    nodes: tuple
    edges: tuple

    def __post_init__(self):
        nodes = tuple(str(v) for v in self.nodes)
        edges = tuple((str(u), str(v)) for u, v in self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        if len(set(nodes)) != len(nodes):
            raise InvalidGraph("duplicate node identifiers")
        known = set(nodes)
        seen = set()
        for u, v in edges:
            if u not in known or v not in known:
                raise InvalidGraph(f"edge ({u}, {v}) uses an undeclared node")
            if u == v:
                raise InvalidGraph(f"loop at {u}")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidGraph(f"parallel edge ({u}, {v})")
            seen.add(key)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.nodes)}

    @cached_property
    def edge_index(self) -> dict:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    @cached_property
    def star_masks(self) -> tuple:
        """Bitmask over edge indices of the star of each node (by node index)."""
        masks = [0] * len(self.nodes)
        idx = self.index
        for i, (u, v) in enumerate(self.edges):
            masks[idx[u]] |= 1 << i
            masks[idx[v]] |= 1 << i
        return tuple(masks)

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def incident_edges(self, v) -> list:
        return [i for i, e in enumerate(self.edges) if v in e]

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edge_index

    def node_mask(self, nodes: Iterable) -> int:
        idx = self.index
        mask = 0
        for v in nodes:
            mask |= 1 << idx[v]
        return mask

    def nodes_of(self, mask: int) -> frozenset:
        return frozenset(v for i, v in enumerate(self.nodes) if mask >> i & 1)

    def cut_mask(self, node_mask: int) -> int:
        """Edge bitmask of the cut defined by a node bitmask."""
        out = 0
        stars = self.star_masks
        i = 0
        while node_mask:
            if node_mask & 1:
                out ^= stars[i]
            node_mask >>= 1
            i += 1
        return out

    def subgraph(self, edge_indices: Iterable[int], extra_nodes: Iterable = ()) -> "Graph":
        """Subgraph spanned by the given edges (plus extra nodes), in host order."""
        keep = sorted(set(edge_indices))
        used = set(extra_nodes)
        for i in keep:
            used.update(self.edges[i])
        return Graph(tuple(v for v in self.nodes if v in used),
                     tuple(self.edges[i] for i in keep))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g)) == 1


def connected_components(g: Graph, removed_nodes=frozenset(), removed_edges=frozenset()) -> list:
    """Node sets of the components left after deleting nodes and edge indices."""
    removed_nodes = set(removed_nodes)
    removed_edges = set(removed_edges)
    adj = {v: [] for v in g.nodes if v not in removed_nodes}
    for i, (u, v) in enumerate(g.edges):
        if i in removed_edges or u in removed_nodes or v in removed_nodes:
            continue
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    comps = []
    for s in g.nodes:
        if s not in adj or s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def cut_nodes(g: Graph) -> list:
    """Nodes whose removal disconnects the (connected) graph, in node order."""
    base = len(connected_components(g))
    return [v for v in g.nodes if len(connected_components(g, {v})) > base]


def bridges(g: Graph) -> list:
    base = len(connected_components(g))
    return [i for i in range(g.m) if len(connected_components(g, removed_edges={i})) > base]


@dataclass(frozen=True)
class SteinerGraph:
    graph: Graph
    terminals: frozenset

    def __post_init__(self):
        terms = frozenset(str(t) for t in self.terminals)
        object.__setattr__(self, "terminals", terms)
        if not terms <= set(self.graph.nodes):
            raise InvalidGraph("terminals must be nodes of the graph")
        if len(terms) < 2:
            raise InvalidGraph("a Steiner graph needs at least two terminals")
        if not is_connected(self.graph):
            raise InvalidGraph("graph is not connected")

    @classmethod
    def build(cls, nodes: Sequence, edges: Sequence, terminals: Iterable) -> "SteinerGraph":
        return cls(Graph(tuple(nodes), tuple(tuple(e) for e in edges)), frozenset(terminals))

    @property
    def nodes(self) -> tuple:
        return self.graph.nodes

    @property
    def edges(self) -> tuple:
        return self.graph.edges

    @cached_property
    def anchor(self) -> str:
        """The terminal kept outside every canonical cut set (largest name)."""
        return max(self.terminals)

    @cached_property
    def terminal_mask(self) -> int:
        return self.graph.node_mask(self.terminals)

    def is_terminal(self, v) -> bool:
        return v in self.terminals


def validate_cut(g: SteinerGraph, s) -> frozenset:
    s = frozenset(s)
    unknown = s - set(g.nodes)
    if unknown:
        raise InvalidCutSet(f"unknown nodes {sorted(unknown)}")
    if not s or len(s) == g.graph.n:
        raise InvalidCutSet("cut set must be a nonempty proper subset of the nodes")
    return s


def canonical_cut(g: SteinerGraph, s) -> frozenset:
    """Representative of delta(S) that avoids the anchor terminal."""
    s = validate_cut(g, s)
    if g.anchor in s:
        return frozenset(g.nodes) - s
    return s


def delta(g: SteinerGraph, s) -> frozenset:
    """Edge indices with exactly one endpoint in S."""
    s = validate_cut(g, s)
    return frozenset(i for i, (u, v) in enumerate(g.edges) if (u in s) != (v in s))


def is_steiner_cut(g: SteinerGraph, s) -> bool:
    s = validate_cut(g, s)
    return bool(s & g.terminals) and bool(g.terminals - s)


def incidence_vector(g: SteinerGraph, s) -> tuple:
    d = delta(g, s)
    return tuple(Fraction(1) if i in d else Fraction(0) for i in range(g.graph.m))


def weight_of(weights: Sequence, edge_mask: int) -> Fraction:
    total = Fraction(0)
    i = 0
    while edge_mask:
        if edge_mask & 1:
            total += weights[i]
        edge_mask >>= 1
        i += 1
    return total


@dataclass(frozen=True)
class WeightedSteinerGraph:
    sg: SteinerGraph
    weights: tuple = field(default=None)

    def __post_init__(self):
        w = self.weights
        if w is None:
            w = (Fraction(1),) * self.sg.graph.m
        w = tuple(parse_rational(x) for x in w)
        if len(w) != self.sg.graph.m:
            raise InvalidGraph(f"expected {self.sg.graph.m} weights, got {len(w)}")
        if any(x < 0 for x in w):
            raise InvalidGraph("weights must be nonnegative")
        object.__setattr__(self, "weights", w)

    @property
    def graph(self) -> Graph:
        return self.sg.graph

    @property
    def terminals(self) -> frozenset:
        return self.sg.terminals

    def weight(self, u, v) -> Fraction:
        return self.weights[self.graph.edge_index[frozenset((u, v))]]

    def cut_weight(self, s) -> Fraction:
        return sum((self.weights[i] for i in delta(self.sg, s)), Fraction(0))


def steiner_graph_from_dict(data: dict) -> SteinerGraph | WeightedSteinerGraph:
    """Parse the graph JSON schema; weighted when ``"weights"`` is present."""
    if not isinstance(data, dict):
        raise InvalidGraph("graph JSON must be an object")
    for key in ("nodes", "edges", "terminals"):
        if key not in data:
            raise InvalidGraph(f"missing field '{key}'")
    if not isinstance(data["nodes"], list):
        raise InvalidGraph("field 'nodes' must be a list")
    if not isinstance(data["edges"], list) or any(
        not isinstance(e, list) or len(e) != 2 for e in data["edges"]
    ):
        raise InvalidGraph("field 'edges' must be a list of node pairs")
    if not isinstance(data["terminals"], list):
        raise InvalidGraph("field 'terminals' must be a list")
    sg = SteinerGraph.build(data["nodes"], data["edges"], data["terminals"])
    if "weights" in data and data["weights"] is not None:
        if not isinstance(data["weights"], list):
            raise InvalidGraph("field 'weights' must be a list")
        return WeightedSteinerGraph(sg, tuple(parse_rational(w) for w in data["weights"]))
    return sg


def steiner_graph_to_dict(g: SteinerGraph | WeightedSteinerGraph) -> dict:
    sg = g.sg if isinstance(g, WeightedSteinerGraph) else g
    out = {
        "nodes": list(sg.nodes),
        "edges": [list(e) for e in sg.edges],
        "terminals": [v for v in sg.nodes if v in sg.terminals],
    }
    if isinstance(g, WeightedSteinerGraph):
        out["weights"] = [format_rational(w) for w in g.weights]
    return out


def load_graph(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraph(f"invalid JSON: {exc.msg}") from exc
    return steiner_graph_from_dict(data)


def dump_graph(g) -> str:
    return json.dumps(steiner_graph_to_dict(g))
