"""Steiner cut enumeration, minimum Steiner cut value, roots and max-flow."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .core import (
    GuardExceeded,
    Graph,
    SteinerCutError,
    SteinerGraph,
    WeightedSteinerGraph,
)

MAX_ENUM_NODES = 24


@dataclass(frozen=True)
class RootList:
    roots: tuple  # canonical cut sets (frozensets of nodes)
    gamma: Fraction


def _check_guard(sg: SteinerGraph, limit: int = MAX_ENUM_NODES):
    if sg.graph.n > limit:
        raise GuardExceeded(f"cut enumeration limited to {limit} nodes, got {sg.graph.n}")


@lru_cache(maxsize=512)
def steiner_cut_masks(sg: SteinerGraph) -> tuple:
    """All canonical T-Steiner cuts as ``(node_mask, edge_mask)`` pairs.

    Canonical sets avoid the anchor terminal, so each cut appears once.  The
    order is by node mask, which is deterministic for a fixed node order.
    """
    _check_guard(sg)
    g = sg.graph
    anchor = g.index[sg.anchor]
    free = [i for i in range(g.n) if i != anchor]
    stars = g.star_masks
    tmask = sg.terminal_mask
    out = []
    node_mask = 0
    edge_mask = 0
    for i in range(1, 1 << len(free)):
        bit = (i & -i).bit_length() - 1
        v = free[bit]
        node_mask ^= 1 << v
        edge_mask ^= stars[v]
        if node_mask & tmask:
            out.append((node_mask, edge_mask))
    out.sort()
    return tuple(out)


def enumerate_steiner_cuts(g: SteinerGraph) -> list:
    """Every T-Steiner cut once, as the node set avoiding the anchor terminal."""
    return [g.graph.nodes_of(nm) for nm, _ in steiner_cut_masks(g)]


def integer_weights(weights) -> tuple:
    """Scale rational weights to integers; returns ``(ints, scale)``."""
    den = lcm(*(Fraction(w).denominator for w in weights)) if weights else 1
    return tuple(int(Fraction(w) * den) for w in weights), den


def mask_weight(int_weights, edge_mask: int) -> int:
    total = 0
    i = 0
    while edge_mask:
        low = edge_mask & -edge_mask
        i = low.bit_length() - 1
        total += int_weights[i]
        edge_mask ^= low
    return total


def cut_weights(wg: WeightedSteinerGraph) -> tuple:
    """``(masks, int_weights_of_cuts, scale)`` for all canonical Steiner cuts."""
    masks = steiner_cut_masks(wg.sg)
    ints, scale = integer_weights(wg.weights)
    return masks, [mask_weight(ints, em) for _, em in masks], scale


def _gamma_enumerate(wg: WeightedSteinerGraph) -> Fraction:
    masks, ws, scale = cut_weights(wg)
    return Fraction(min(ws), scale)


def gamma(wg: WeightedSteinerGraph, method: str = "enumerate") -> Fraction:
    """Minimum weight of a T-Steiner cut."""
    if method == "enumerate":
        return _gamma_enumerate(wg)
    if method == "maxflow":
        return steiner_min_cut_maxflow(wg)[0]
    raise ValueError(f"unknown method {method!r}")


def root_masks(wg: WeightedSteinerGraph) -> tuple:
    """Gamma and the ``(node_mask, edge_mask)`` pairs of all roots."""
    masks, ws, scale = cut_weights(wg)
    best = min(ws)
    return Fraction(best, scale), [mk for mk, w in zip(masks, ws) if w == best]


def roots(wg: WeightedSteinerGraph) -> RootList:
    gam, rms = root_masks(wg)
    g = wg.graph
    return RootList(tuple(g.nodes_of(nm) for nm, _ in rms), gam)


def max_flow_min_cut(g: Graph, capacities, s, t) -> tuple:
    """Exact Edmonds-Karp on an undirected graph.

    Returns ``(value, S)`` where S is the set of nodes reachable from ``s`` in
    the final residual graph, a minimum s-t cut.
    """
    caps = [Fraction(c) for c in capacities]
    if len(caps) != g.m:
        raise SteinerCutError("one capacity per edge required")
    if any(c < 0 for c in caps):
        raise SteinerCutError("capacities must be nonnegative")
    if s == t:
        raise SteinerCutError("source and sink coincide")
    idx = g.index
    inc = [[] for _ in range(g.n)]
    ends = []
    for i, (u, v) in enumerate(g.edges):
        a, b = idx[u], idx[v]
        ends.append((a, b))
        inc[a].append(i)
        inc[b].append(i)
    flow = [Fraction(0)] * g.m
    src, snk = idx[s], idx[t]

    def residual(e, x):
        a, _ = ends[e]
        return caps[e] - flow[e] if x == a else caps[e] + flow[e]

    value = Fraction(0)
    while True:
        parent = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            x = queue.popleft()
            for e in inc[x]:
                a, b = ends[e]
                y = b if x == a else a
                if y not in parent and residual(e, x) > 0:
                    parent[y] = (x, e)
                    queue.append(y)
        if snk not in parent:
            break
        path = []
        y = snk
        while parent[y] is not None:
            x, e = parent[y]
            path.append((x, e))
            y = x
        bottleneck = min(residual(e, x) for x, e in path)
        for x, e in path:
            if x == ends[e][0]:
                flow[e] += bottleneck
            else:
                flow[e] -= bottleneck
        value += bottleneck
    side = frozenset(g.nodes[i] for i in parent)
    return value, side


def steiner_min_cut_maxflow(wg: WeightedSteinerGraph) -> tuple:
    """Minimum Steiner cut via |T|-1 max-flows from the smallest terminal."""
    terms = sorted(wg.terminals)
    s = terms[0]
    best = None
    for t in terms[1:]:
        value, side = max_flow_min_cut(wg.graph, wg.weights, s, t)
        if best is None or value < best[0]:
            best = (value, side)
    return best
