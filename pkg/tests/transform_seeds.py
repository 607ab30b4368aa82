"""Certified facet-inducing seeds for transform tests."""

import random

from steinercut.core import WeightedSteinerGraph
from steinercut.corpus import cycle_graph, random_steiner_cactus, random_steiner_tree, tau6_irreducibles
from steinercut.treecactus import canonical_weights


def tree_or_cactus(rng: random.Random) -> WeightedSteinerGraph:
    if rng.random() < 0.5:
        sg = random_steiner_tree(rng, rng.randint(2, 8))
    else:
        sg = random_steiner_cactus(rng, rng.randint(1, 3))
    w, _ = canonical_weights(sg)
    return WeightedSteinerGraph(sg, w)


def seed(rng: random.Random) -> WeightedSteinerGraph:
    r = rng.random()
    if r < 0.15:
        return rng.choice(list(tau6_irreducibles().values()))
    if r < 0.25:
        return WeightedSteinerGraph(cycle_graph(rng.randint(3, 6)))
    return tree_or_cactus(rng)


def fresh_name(wg, base="w"):
    k = 0
    while f"{base}{k}" in wg.graph.index:
        k += 1
    return f"{base}{k}"


def degree3_nonterminals(wg):
    return [v for v in wg.graph.nodes if v not in wg.terminals and wg.graph.degree(v) == 3]


def reducible_nodes(wg):
    out = []
    g = wg.graph
    for v in g.nodes:
        if v in wg.terminals or g.degree(v) != 2:
            continue
        i, j = g.incident_edges(v)
        a = next(x for x in g.edges[i] if x != v)
        b = next(x for x in g.edges[j] if x != v)
        if not g.has_edge(a, b) and wg.weights[i] == wg.weights[j]:
            out.append(v)
    return out
