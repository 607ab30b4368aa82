"""Instance generators: named graphs, exhaustive small-graph corpora up to
isomorphism, random weighted instances and tree/cactus seeds."""

from __future__ import annotations

import random
from itertools import combinations

from .core import Graph, SteinerGraph, WeightedSteinerGraph
from .search import canonical_form, canonical_labelling


def _names(k: int) -> list:
    return [str(i + 1) for i in range(k)]


def path_graph(k: int, terminals=None) -> SteinerGraph:
    """Path on nodes 1..k; endpoints are the terminals by default."""
    v = _names(k)
    return SteinerGraph.build(v, list(zip(v, v[1:])), terminals or [v[0], v[-1]])


def cycle_graph(k: int, terminals=None) -> SteinerGraph:
    v = _names(k)
    return SteinerGraph.build(v, list(zip(v, v[1:])) + [(v[-1], v[0])], terminals or v)


def complete_graph(k: int, terminals=None) -> SteinerGraph:
    v = _names(k)
    return SteinerGraph.build(v, list(combinations(v, 2)), terminals or v)


def prism_graph() -> Graph:
    return Graph(tuple("123456"), (("1", "2"), ("2", "3"), ("1", "3"), ("4", "5"), ("5", "6"),
                                   ("4", "6"), ("1", "4"), ("2", "5"), ("3", "6")))


def pyramid_graph() -> Graph:
    return Graph(tuple("1234567"), (("1", "2"), ("2", "3"), ("1", "3"), ("1", "4"), ("2", "5"),
                                    ("3", "6"), ("7", "4"), ("7", "5"), ("7", "6")))


def _weighted(nodes, rows, terminals) -> WeightedSteinerGraph:
    edges = [(a, b) for a, b, _ in rows]
    return WeightedSteinerGraph(SteinerGraph.build(nodes, edges, terminals), tuple(str(w) for _, _, w in rows))


def tau6_irreducibles() -> dict:
    """The five irreducible facet inducing graphs with six terminals and at
    most seven nodes, labelled (a)-(e), with their facet weights."""
    six = [f"v{i}" for i in range(1, 7)]
    seven = six + ["v7"]
    out = {}
    out["a"] = WeightedSteinerGraph(SteinerGraph.build(six, list(zip(six, six[1:] + six[:1])), six))
    out["b"] = _weighted(six, [
        ("v1", "v2", 2), ("v3", "v4", 2), ("v5", "v6", 2),
        ("v1", "v3", 1), ("v3", "v5", 1), ("v5", "v1", 1),
        ("v2", "v4", 1), ("v4", "v6", 1), ("v6", "v2", 1)], six)
    out["c"] = _weighted(seven, [
        ("v7", "v1", 2), ("v7", "v3", 2), ("v7", "v5", 2),
        ("v1", "v2", 2), ("v3", "v4", 2), ("v5", "v6", 2),
        ("v2", "v4", 1), ("v4", "v6", 1), ("v6", "v2", 1)], six)
    out["d"] = _weighted(seven, [
        ("v1", "v2", 2), ("v3", "v4", 2), ("v5", "v7", 2), ("v7", "v6", 2),
        ("v1", "v3", 1), ("v3", "v5", 1), ("v5", "v1", 1),
        ("v2", "v4", 1), ("v4", "v6", 1), ("v6", "v2", 1)], [v for v in six if v != "v5"] + ["v7"])
    out["e"] = _weighted(seven, [
        ("v1", "v2", 2), ("v3", "v4", 2), ("v5", "v6", 2),
        ("v1", "v3", 1), ("v3", "v5", 1), ("v5", "v7", 3), ("v7", "v1", 1),
        ("v2", "v4", 1), ("v4", "v6", 1), ("v6", "v2", 1)], [v for v in six if v != "v5"] + ["v7"])
    return out


# --- exhaustive corpora ------------------------------------------------------

def _code(n: int, edges) -> tuple:
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return (n,) + canonical_labelling(adj, [False] * n)[0]


def connected_graphs(max_nodes: int, max_edges: int) -> list:
    """All connected simple graphs with at least one edge, up to isomorphism,
    as ``(n, edges)`` with edges on ``0..n-1``.

    Grown from K2 by adding an edge or a pendant node; every connected graph
    arises since it has a leaf or an edge on a cycle to remove.
    """
    level = {_code(2, [(0, 1)]): (2, ((0, 1),))}
    out = list(level.values())
    for _ in range(max_edges - 1):
        nxt = {}
        for n, es in level.values():
            present = set(es)
            options = [(n, es + (e,)) for e in combinations(range(n), 2) if e not in present]
            if n < max_nodes:
                options += [(n + 1, es + ((v, n),)) for v in range(n)]
            for n2, es2 in options:
                key = _code(n2, es2)
                if key not in nxt:
                    nxt[key] = (n2, tuple(sorted(es2)))
        level = nxt
        out.extend(level.values())
    return out


def to_graph(n: int, edges) -> Graph:
    v = _names(n)
    return Graph(tuple(v), tuple((v[a], v[b]) for a, b in edges))


def terminal_assignments(g: Graph, sizes) -> list:
    """Steiner graphs on ``g`` for each terminal count, up to isomorphism."""
    seen = {}
    for k in sizes:
        if k > g.n:
            continue
        for terms in combinations(g.nodes, k):
            sg = SteinerGraph(g, frozenset(terms))
            key = canonical_form(sg)
            if key not in seen:
                seen[key] = sg
    return list(seen.values())


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """Random spanning tree plus up to ``extra_edges`` random chords."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    free = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(free)
    edges.update(free[:extra_edges])
    return to_graph(n, sorted(edges))


def random_weighted_instance(rng: random.Random, max_nodes: int = 9) -> WeightedSteinerGraph:
    """Random connected graph, terminal set and rational weights (zeros allowed)."""
    n = rng.randint(2, max_nodes)
    g = random_connected_graph(rng, n, rng.randint(0, n))
    k = rng.randint(2, n)
    terms = rng.sample(g.nodes, k)
    weights = []
    for _ in range(g.m):
        num = rng.randint(0, 6)
        den = rng.choice([1, 1, 2, 3])
        weights.append(f"{num}/{den}")
    return WeightedSteinerGraph(SteinerGraph(g, frozenset(terms)), tuple(weights))


# --- tree / cactus seeds ---------------------------------------------------------

def random_steiner_tree(rng: random.Random, n: int) -> SteinerGraph:
    """Random tree on n nodes; leaves plus a random subset of the rest are terminals."""
    g = random_connected_graph(rng, n, 0)
    leaves = [v for v in g.nodes if g.degree(v) == 1]
    others = [v for v in g.nodes if g.degree(v) > 1]
    extra = [v for v in others if rng.random() < 0.4]
    return SteinerGraph(g, frozenset(leaves + extra))


def random_steiner_cactus(rng: random.Random, blocks: int) -> SteinerGraph:
    """Glue random cycles and edges into a cactus; choose terminals so that
    leaves are terminals and every cycle has three cut nodes or terminals."""
    nodes = ["1"]
    edges = []
    cycles = []
    made_cycle = False
    for b in range(blocks):
        at = rng.choice(nodes)
        if rng.random() < 0.6 or (b == blocks - 1 and not made_cycle):
            k = rng.randint(3, 5)
            fresh = [str(len(nodes) + i + 1) for i in range(k - 1)]
            ring = [at] + fresh
            nodes += fresh
            edges += list(zip(ring, ring[1:] + ring[:1]))
            cycles.append(ring)
            made_cycle = True
        else:
            w = str(len(nodes) + 1)
            nodes.append(w)
            edges.append((at, w))
    g = Graph(tuple(nodes), tuple(edges))
    terms = {v for v in nodes if g.degree(v) == 1}
    terms |= {v for v in nodes if rng.random() < 0.3}
    for ring in cycles:
        good = [v for v in ring if v in terms or g.degree(v) > 2]
        missing = [v for v in ring if v not in good]
        rng.shuffle(missing)
        terms |= set(missing[:max(0, 3 - len(good))])
    if len(terms) < 2:
        terms |= set(nodes[:2])
    return SteinerGraph(g, frozenset(terms))
