"""Steiner trees and Steiner cacti: recognition, canonical inequalities,
subgraph enumeration and the complete facet list for at most five terminals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import (
    GuardExceeded,
    Graph,
    SteinerCutError,
    SteinerGraph,
    cut_nodes,
    is_connected,
)
from .facets import Inequality, sort_inequalities

MAX_SUBGRAPH_EDGES = 20


class NotTreeOrCactus(SteinerCutError):
    pass


class TooManyTerminals(SteinerCutError):
    pass


class BadIndex(SteinerCutError):
    pass


class Kind(str, Enum):
    TREE = "SteinerTree"
    CACTUS = "SteinerCactus"
    NEITHER = "Neither"


def biconnected_blocks(g: Graph) -> list:
    """Edge index sets of the blocks (2-connected pieces and bridges)."""
    idx = g.index
    adj = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        adj[idx[u]].append((idx[v], i))
        adj[idx[v]].append((idx[u], i))
    disc = [-1] * g.n
    low = [0] * g.n
    blocks = []
    edge_stack = []
    counter = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = set()
                    while True:
                        e = edge_stack.pop()
                        block.add(e)
                        if e == parent_edge:
                            break
                    blocks.append(frozenset(block))
    return blocks


def _block_nodes(g: Graph, block) -> set:
    out = set()
    for i in block:
        out.update(g.edges[i])
    return out


def is_cactus_like(g: Graph) -> bool:
    """Every block is a single edge or a cycle (trees included)."""
    return all(len(b) == 1 or len(b) == len(_block_nodes(g, b)) for b in biconnected_blocks(g))


@dataclass(frozen=True)
class CactusDecomposition:
    cycles: tuple  # frozensets of edge indices
    bridges: frozenset
    cycle_degrees: tuple  # cycle nodes that are cut nodes of the host

    @classmethod
    def of(cls, g: Graph) -> "CactusDecomposition":
        if not is_connected(g) or not is_cactus_like(g):
            raise NotTreeOrCactus("graph is not a cactus")
        blocks = biconnected_blocks(g)
        cycles = tuple(sorted((b for b in blocks if len(b) > 1), key=sorted))
        if not cycles:
            raise NotTreeOrCactus("a cactus needs at least one cycle")
        bridge_set = frozenset(i for b in blocks if len(b) == 1 for i in b)
        cuts = set(cut_nodes(g))
        degrees = tuple(len(_block_nodes(g, c) & cuts) for c in cycles)
        return cls(cycles, bridge_set, degrees)


def defect(dec: CactusDecomposition, cycle_index: int) -> int:
    if not 0 <= cycle_index < len(dec.cycles):
        raise BadIndex(f"no cycle with index {cycle_index}")
    return max(0, 3 - dec.cycle_degrees[cycle_index])


def leaves(g: Graph) -> list:
    return [v for v in g.nodes if g.degree(v) == 1]


def classify_tree_cactus(sg: SteinerGraph) -> Kind:
    g = sg.graph
    if any(v not in sg.terminals for v in leaves(g)):
        return Kind.NEITHER
    if g.m == g.n - 1:
        return Kind.TREE
    if not is_cactus_like(g):
        return Kind.NEITHER
    cuts = set(cut_nodes(g))
    for block in biconnected_blocks(g):
        if len(block) > 1:
            good = _block_nodes(g, block) & (cuts | sg.terminals)
            if len(good) < 3:
                return Kind.NEITHER
    return Kind.CACTUS


def canonical_weights(sg: SteinerGraph) -> tuple:
    """``(weights, rhs)`` of the tree or cactus inequality of ``sg``."""
    kind = classify_tree_cactus(sg)
    if kind is Kind.TREE:
        return (Fraction(1),) * sg.graph.m, Fraction(1)
    if kind is Kind.CACTUS:
        dec = CactusDecomposition.of(sg.graph)
        w = tuple(Fraction(2) if i in dec.bridges else Fraction(1) for i in range(sg.graph.m))
        return w, Fraction(2)
    raise NotTreeOrCactus("neither a Steiner tree nor a Steiner cactus")


def canonical_inequality(sg: SteinerGraph) -> Inequality:
    w, rhs = canonical_weights(sg)
    kind = "tree" if rhs == 1 else "cactus"
    return Inequality(w, rhs, sg, kind)


def _guard(sg: SteinerGraph):
    if sg.graph.m > MAX_SUBGRAPH_EDGES:
        raise GuardExceeded(f"subgraph enumeration limited to {MAX_SUBGRAPH_EDGES} edges")


def _edge_ends(g: Graph) -> list:
    idx = g.index
    return [(1 << idx[u]) | (1 << idx[v]) for u, v in g.edges]


def _reachable(stars, ends, start_nodes: int, allowed_edges: int) -> int:
    seen = start_nodes
    frontier = start_nodes
    while frontier:
        edges = 0
        f = frontier
        while f:
            low = f & -f
            edges |= stars[low.bit_length() - 1]
            f ^= low
        edges &= allowed_edges
        new = 0
        while edges:
            low = edges & -edges
            new |= ends[low.bit_length() - 1]
            edges ^= low
        frontier = new & ~seen
        seen |= new
    return seen


def _connected_edge_sets(sg: SteinerGraph, acyclic: bool, all_terms_stop: bool):
    """Connected edge sets containing every terminal (bitmasks), pruned.

    Each set is produced once: edges touching the current subgraph are
    branched on in index order (include / exclude).  ``acyclic`` restricts
    to trees; otherwise every intermediate set must be cactus-like.
    """
    g = sg.graph
    stars = g.star_masks
    ends = _edge_ends(g)
    tmask = sg.terminal_mask
    root = g.index[min(sg.terminals)]
    all_edges = (1 << g.m) - 1

    def cactus_ok(edge_mask: int) -> bool:
        sub = g.subgraph([i for i in range(g.m) if edge_mask >> i & 1])
        return is_cactus_like(sub)

    out = []

    def rec(nodes: int, fset: int, excluded: int):
        if (nodes & tmask) == tmask and all_terms_stop:
            out.append(fset)
            return
        if _reachable(stars, ends, nodes, all_edges & ~excluded) & tmask != tmask:
            return
        touching = 0
        f = nodes
        while f:
            low = f & -f
            touching |= stars[low.bit_length() - 1]
            f ^= low
        frontier = touching & ~fset & ~excluded
        if not frontier:
            if (nodes & tmask) == tmask:
                out.append(fset)
            return
        e = frontier & -frontier
        i = e.bit_length() - 1
        new_nodes = nodes | ends[i]
        closes_cycle = new_nodes == nodes
        if acyclic:
            if not closes_cycle:
                rec(new_nodes, fset | e, excluded)
        elif not closes_cycle or cactus_ok(fset | e):
            rec(new_nodes, fset | e, excluded)
        rec(nodes, fset, excluded | e)

    rec(1 << root, 0, 0)
    return out


def _mask_to_indices(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _sub_steiner(sg: SteinerGraph, edge_set) -> SteinerGraph:
    return SteinerGraph(sg.graph.subgraph(edge_set, sg.terminals), sg.terminals)


def enumerate_steiner_subtrees(sg: SteinerGraph) -> list:
    """Edge sets of all Steiner subtrees (trees spanning T, leaves in T)."""
    _guard(sg)
    result = []
    for mask in _connected_edge_sets(sg, acyclic=True, all_terms_stop=True):
        es = _mask_to_indices(mask)
        if es and classify_tree_cactus(_sub_steiner(sg, es)) is Kind.TREE:
            result.append(es)
    return sorted(result, key=lambda s: (len(s), sorted(s)))


def enumerate_steiner_subcacti(sg: SteinerGraph) -> list:
    """Edge sets of all Steiner subcacti of ``sg`` with terminal set T."""
    _guard(sg)
    result = []
    for mask in _connected_edge_sets(sg, acyclic=False, all_terms_stop=False):
        es = _mask_to_indices(mask)
        if len(es) < 3:
            continue
        if classify_tree_cactus(_sub_steiner(sg, es)) is Kind.CACTUS:
            result.append(es)
    return sorted(result, key=lambda s: (len(s), sorted(s)))


def _embed(sg: SteinerGraph, edge_set, kind: str) -> Inequality:
    sub = _sub_steiner(sg, edge_set)
    w, rhs = canonical_weights(sub)
    order = sorted(edge_set)
    coeffs = [Fraction(0)] * sg.graph.m
    for local, host in enumerate(order):
        coeffs[host] = w[local]
    return Inequality(tuple(coeffs), rhs, sg, kind)


def enumerate_facets_le5(sg: SteinerGraph) -> list:
    """All non-trivial facets of cut+(G, T) for |T| <= 5 (trees and cacti)."""
    if len(sg.terminals) > 5:
        raise TooManyTerminals("classification covers at most five terminals")
    _guard(sg)
    ineqs = {}
    for es in enumerate_steiner_subtrees(sg):
        q = _embed(sg, es, "tree")
        ineqs.setdefault(q.key(), q)
    for es in enumerate_steiner_subcacti(sg):
        q = _embed(sg, es, "cactus")
        ineqs.setdefault(q.key(), q)
    return sort_inequalities(ineqs.values())


def cut_dominant_degree5_facets(g: Graph) -> list:
    """Facets of cut+(G) = cut+(G, V(G)) of Steiner degree at most five.

    Spanning trees with at most five leaves, and spanning cacti whose leaf
    count plus total cycle defect is at most five.
    """
    sg = SteinerGraph(g, frozenset(g.nodes))
    _guard(sg)
    out = []
    for es in enumerate_steiner_subtrees(sg):
        sub = g.subgraph(es)
        if len(leaves(sub)) <= 5:
            out.append(_embed(sg, es, "tree"))
    for es in enumerate_steiner_subcacti(sg):
        sub = g.subgraph(es)
        dec = CactusDecomposition.of(sub)
        total = len(leaves(sub)) + sum(defect(dec, i) for i in range(len(dec.cycles)))
        if total <= 5:
            out.append(_embed(sg, es, "cactus"))
    return sort_inequalities(out)
