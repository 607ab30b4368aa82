"""Search for irreducible facet inducing Steiner graphs with a given number
of terminals, up to terminal-preserving isomorphism.

Graphs are generated by adding one edge at a time on a fixed node count,
keeping one representative per isomorphism class (canonical labelling by
colour refinement plus individualization).  Candidates are filtered by the
degree and edge-count bounds for irreducibles and handed to the oracle;
every dense facet found is recorded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import GuardExceeded, Graph, SteinerCutError, SteinerGraph, format_rational
from .oracle import oracle_facets

log = logging.getLogger(__name__)

MAX_SEARCH_NODES = 12


# --- canonical labelling ----------------------------------------------------

def _refine(adj: list, colors: list) -> list:
    """Colour refinement to a stable partition; colours are canonical ranks."""
    n = len(adj)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _encode(adj: list, term: list, order: list) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u in range(len(adj)) for v in adj[u] if u < v)
    terms = tuple(sorted(pos[v] for v in range(len(adj)) if term[v]))
    return terms, tuple(edges)


def _twin_representatives(adj: list, cell: list) -> list:
    # swapping two twins of one cell is an automorphism, so one branch each
    reps = []
    seen = []
    for v in cell:
        nv = set(adj[v])
        if any(nv - {u} == set(adj[u]) - {v} for u in seen):
            continue
        seen.append(v)
        reps.append(v)
    return reps


def canonical_labelling(adj: list, term: list) -> tuple:
    """``(code, order)``: the minimal encoding over the search tree leaves and
    a node order realising it.  ``adj`` holds neighbour lists by index."""
    n = len(adj)
    start = _refine(adj, [0 if term[v] else 1 for v in range(n)])
    best = [None, None]

    def search(colors):
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            code = _encode(adj, term, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        for v in _twin_representatives(adj, cells[target]):
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            search(_refine(adj, split))

    search(start)
    return best[0], best[1]


def _adjacency_lists(sg: SteinerGraph) -> tuple:
    g = sg.graph
    idx = g.index
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[idx[u]].append(idx[v])
        adj[idx[v]].append(idx[u])
    term = [v in sg.terminals for v in g.nodes]
    return adj, term


def canonical_form(sg: SteinerGraph) -> tuple:
    if sg.graph.n > MAX_SEARCH_NODES:
        raise GuardExceeded(f"canonical form limited to {MAX_SEARCH_NODES} nodes")
    adj, term = _adjacency_lists(sg)
    return (sg.graph.n,) + canonical_labelling(adj, term)[0]


def steiner_isomorphic(g1: SteinerGraph, g2: SteinerGraph) -> bool:
    """Is there a graph isomorphism mapping terminals onto terminals?"""
    if g1.graph.n != g2.graph.n or g1.graph.m != g2.graph.m or len(g1.terminals) != len(g2.terminals):
        return False
    return canonical_form(g1) == canonical_form(g2)


def canonical_graph(sg: SteinerGraph) -> SteinerGraph:
    """Relabel nodes ``1..n`` in canonical order, edges sorted."""
    _, terms, edges = canonical_form(sg)
    nodes = [str(i + 1) for i in range(sg.graph.n)]
    return SteinerGraph.build(nodes, [(nodes[a], nodes[b]) for a, b in edges], [nodes[t] for t in terms])


# --- graph generation ------------------------------------------------------

def _edge_bounds(n: int, tau: int) -> tuple:
    lo = (3 * n - tau + 1) // 2  # terminals degree >= 2, nonterminals >= 3
    hi = n + tau - 3
    return lo, hi


def _deficit(deg: list, n_nonterm: int) -> int:
    """Degree still missing when the highest-degree nodes are nonterminals."""
    ds = sorted(deg, reverse=True)
    return sum(max(0, 3 - d) for d in ds[:n_nonterm]) + sum(max(0, 2 - d) for d in ds[n_nonterm:])


def _graph_code(n: int, edges: frozenset) -> tuple:
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    code, order = canonical_labelling(adj, [False] * n)
    return code


def _is_biconnected(n: int, edges) -> bool:
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    def connected(skip: int) -> bool:
        start = 0 if skip != 0 else 1
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y != skip and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n - (skip >= 0)

    return n >= 3 and connected(-1) and all(connected(v) for v in range(n))


def candidate_graphs(n: int, tau: int) -> list:
    """Unlabelled graphs on ``n`` nodes that could carry an irreducible
    facet inducing Steiner graph with ``tau`` terminals (edge sets on 0..n-1)."""
    lo, hi = _edge_bounds(n, tau)
    n_nonterm = n - tau
    # every other node has degree >= 2, and nonterminals beyond this one >= 3
    cap = 2 * hi - 2 * (n - 1) - max(0, n_nonterm - 1)
    level = {_graph_code(n, frozenset()): frozenset()}
    found = []
    for m in range(hi + 1):
        if m >= lo:
            for es in level.values():
                deg = [0] * n
                for a, b in es:
                    deg[a] += 1
                    deg[b] += 1
                if min(deg) >= 2 and sum(d >= 3 for d in deg) >= n_nonterm and _is_biconnected(n, es):
                    found.append(es)
        if m == hi:
            break
        nxt = {}
        for es in level.values():
            deg = [0] * n
            for a, b in es:
                deg[a] += 1
                deg[b] += 1
            for a, b in combinations(range(n), 2):
                if (a, b) in es or deg[a] >= cap or deg[b] >= cap:
                    continue
                new = es | {(a, b)}
                nd = list(deg)
                nd[a] += 1
                nd[b] += 1
                if _deficit(nd, n_nonterm) > 2 * (hi - m - 1):
                    continue
                code = _graph_code(n, new)
                if code not in nxt:
                    nxt[code] = new
        level = nxt
        log.debug("n=%d: %d graphs with %d edges", n, len(level), m + 1)
    return found


def candidate_steiner_graphs(tau: int, n: int) -> list:
    """Pairwise non-isomorphic Steiner graphs on ``n`` nodes with ``tau``
    terminals meeting the irreducibility filters."""
    out = {}
    for es in candidate_graphs(n, tau):
        deg = [0] * n
        for a, b in es:
            deg[a] += 1
            deg[b] += 1
        rich = [v for v in range(n) if deg[v] >= 3]
        nodes = [str(i) for i in range(n)]
        edges = [(nodes[a], nodes[b]) for a, b in sorted(es)]
        for nonterm in combinations(rich, n - tau):
            terms = [nodes[v] for v in range(n) if v not in nonterm]
            sg = SteinerGraph.build(nodes, edges, terms)
            key = canonical_form(sg)
            if key not in out:
                out[key] = canonical_graph(sg)
    return [out[k] for k in sorted(out)]


# --- catalogue ------------------------------------------------------------

@dataclass(frozen=True)
class CatalogueEntry:
    graph: SteinerGraph  # canonical labelling
    facet_weights: tuple  # ((weights tuple, rhs), ...) for every dense facet

    @property
    def rhs_values(self) -> tuple:
        return tuple(r for _, r in self.facet_weights)

    def to_dict(self) -> dict:
        g = self.graph
        return {
            "nodes": list(g.nodes),
            "edges": [list(e) for e in g.edges],
            "terminals": [v for v in g.nodes if v in g.terminals],
            "facets": [
                {"weights": [format_rational(c) for c in w], "rhs": format_rational(r)}
                for w, r in self.facet_weights
            ],
        }


def dense_facets(sg: SteinerGraph) -> tuple:
    """Oracle facets whose support is the whole edge set."""
    out = []
    for q in oracle_facets(sg, max_edges=None, max_cuts=None):
        if all(c != 0 for c in q.coeffs):
            out.append((q.coeffs, q.rhs))
    return tuple(out)


def search_irreducible(tau: int, max_nodes: int) -> list:
    """All irreducible facet inducing Steiner graphs with ``tau`` terminals
    and at most ``max_nodes`` nodes, each with all of its dense facet weights."""
    if tau < 2:
        raise SteinerCutError("need at least two terminals")
    if tau == 2:
        k2 = SteinerGraph.build(["1", "2"], [("1", "2")], ["1", "2"])
        return [CatalogueEntry(k2, (((Fraction(1),), Fraction(1)),))]
    limit = min(3 * tau - 6, MAX_SEARCH_NODES)
    if max_nodes > limit:
        raise GuardExceeded(f"max_nodes must be at most {limit} for {tau} terminals")
    entries = []
    for n in range(tau, max_nodes + 1):
        cands = candidate_steiner_graphs(tau, n)
        log.info("tau=%d n=%d: %d candidates", tau, n, len(cands))
        for sg in cands:
            dense = dense_facets(sg)
            if dense:
                entries.append(CatalogueEntry(sg, dense))
    entries.sort(key=lambda e: canonical_form(e.graph))
    return entries
