import random

import pytest
from hypothesis import given, settings, strategies as st

from steinercut.core import Graph, GuardExceeded, SteinerGraph, WeightedSteinerGraph, is_connected
from steinercut.corpus import complete_graph, cycle_graph, path_graph, random_steiner_cactus, random_steiner_tree
from steinercut.cuts import gamma
from steinercut.facets import is_facet_inducing, verify_facet
from steinercut.oracle import oracle_facets
from steinercut.treecactus import (
    BadIndex,
    CactusDecomposition,
    Kind,
    NotTreeOrCactus,
    TooManyTerminals,
    biconnected_blocks,
    canonical_inequality,
    classify_tree_cactus,
    cut_dominant_degree5_facets,
    defect,
    enumerate_facets_le5,
    enumerate_steiner_subcacti,
    enumerate_steiner_subtrees,
)

from strategies import steiner_graphs

TRI = cycle_graph(3)
K4 = complete_graph(4)


def brute_subgraphs(sg, kind):
    out = set()
    g = sg.graph
    for mask in range(1, 1 << g.m):
        es = [i for i in range(g.m) if mask >> i & 1]
        sub = g.subgraph(es, sg.terminals)
        if not is_connected(sub):
            continue
        if classify_tree_cactus(SteinerGraph(sub, sg.terminals)) is kind:
            out.add(frozenset(es))
    return out


def test_classify_examples():
    tree = SteinerGraph.build("abcdxy", [("a", "x"), ("b", "x"), ("x", "y"), ("y", "c"), ("y", "d")], "abcd")
    assert classify_tree_cactus(tree) is Kind.TREE
    assert classify_tree_cactus(TRI) is Kind.CACTUS
    assert classify_tree_cactus(cycle_graph(3, ["1", "2"])) is Kind.NEITHER
    assert classify_tree_cactus(path_graph(3, ["1", "2"])) is Kind.NEITHER


def test_canonical_inequality_examples():
    tree = SteinerGraph.build("abcx", [("a", "x"), ("b", "x"), ("c", "x")], "abc")
    q = canonical_inequality(tree)
    assert q.coeffs == (1, 1, 1) and q.rhs == 1
    nodes = list("abcdef")
    edges = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("d", "f")]
    cactus = SteinerGraph.build(nodes, edges, "abef")
    q = canonical_inequality(cactus)
    assert q.coeffs == (1, 1, 1, 2, 1, 1, 1) and q.rhs == 2
    q = canonical_inequality(cycle_graph(5))
    assert q.coeffs == (1,) * 5 and q.rhs == 2
    with pytest.raises(NotTreeOrCactus):
        canonical_inequality(complete_graph(4))


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_canonical_inequality_is_facet(s):
    rng = random.Random(s)
    for host in (random_steiner_tree(rng, rng.randint(2, 7)), random_steiner_cactus(rng, rng.randint(1, 3))):
        q = canonical_inequality(host)
        wg = WeightedSteinerGraph(host, q.coeffs)
        assert verify_facet(wg).gamma == q.rhs
        if q.kind == "tree":
            assert gamma(wg) == 1


def test_subtree_examples():
    assert enumerate_steiner_subtrees(path_graph(3)) == [frozenset({0, 1})]
    assert len(enumerate_steiner_subtrees(TRI)) == 3
    trees = enumerate_steiner_subtrees(K4)
    assert len(trees) == 16
    assert set(trees) == brute_subgraphs(K4, Kind.TREE)


def test_subcactus_examples():
    assert enumerate_steiner_subcacti(TRI) == [frozenset({0, 1, 2})]
    assert enumerate_steiner_subcacti(path_graph(5, ["1", "3", "5"])) == []
    cacti = enumerate_steiner_subcacti(K4)
    assert set(cacti) == brute_subgraphs(K4, Kind.CACTUS)
    assert sum(len(c) == 4 and all(K4.graph.subgraph(c).degree(v) == 2 for v in K4.nodes) for c in cacti) == 3
    assert sum(len(c) == 4 for c in cacti) == 3 + 12


@settings(max_examples=40)
@given(steiner_graphs(max_nodes=6))
def test_enumeration_matches_brute_force(sg):
    if sg.graph.m > 10:
        return
    assert set(enumerate_steiner_subtrees(sg)) == brute_subgraphs(sg, Kind.TREE)
    assert set(enumerate_steiner_subcacti(sg)) == brute_subgraphs(sg, Kind.CACTUS)


def test_facets_le5_examples():
    facets = enumerate_facets_le5(path_graph(3))
    assert [(q.coeffs, q.rhs) for q in facets] == [((1, 1), 1)]
    facets = enumerate_facets_le5(TRI)
    assert sorted(q.rhs for q in facets) == [1, 1, 1, 2]
    c5 = cycle_graph(5)
    facets = enumerate_facets_le5(c5)
    assert {q.key() for q in facets} == oracle_facets(c5).keys()
    assert len(facets) == 6
    with pytest.raises(TooManyTerminals):
        enumerate_facets_le5(cycle_graph(6))


@settings(max_examples=40)
@given(steiner_graphs(max_nodes=6, min_terminals=2, max_terminals=5))
def test_classification_equals_oracle(sg):
    if sg.graph.m > 10:
        return
    ours = enumerate_facets_le5(sg)
    assert {q.key() for q in ours} == oracle_facets(sg, None, None).keys()
    for q in ours:
        sub = SteinerGraph(sg.graph.subgraph(q.support, sg.terminals), sg.terminals)
        assert verify_facet(WeightedSteinerGraph(sub, tuple(q.coeffs[i] for i in q.support))).gamma == q.rhs


def test_defect_examples():
    dec = CactusDecomposition.of(cycle_graph(4).graph)
    assert defect(dec, 0) == 3
    g = Graph(tuple("1234"), (("1", "2"), ("2", "3"), ("1", "3"), ("3", "4")))
    assert defect(CactusDecomposition.of(g), 0) == 2
    g = Graph(tuple("123abc"), (("1", "2"), ("2", "3"), ("1", "3"), ("1", "a"), ("2", "b"), ("3", "c")))
    assert defect(CactusDecomposition.of(g), 0) == 0
    with pytest.raises(BadIndex):
        defect(dec, 1)


def test_decomposition_partitions_edges():
    rng = random.Random(11)
    for _ in range(30):
        sg = random_steiner_cactus(rng, rng.randint(1, 4))
        dec = CactusDecomposition.of(sg.graph)
        parts = list(dec.cycles) + [frozenset([i]) for i in dec.bridges]
        assert sorted(i for p in parts for i in p) == list(range(sg.graph.m))


def test_blocks_of_bowtie():
    g = Graph(tuple("12345"), (("1", "2"), ("2", "3"), ("1", "3"), ("3", "4"), ("4", "5"), ("3", "5")))
    assert sorted(map(sorted, biconnected_blocks(g))) == [[0, 1, 2], [3, 4, 5]]


def test_degree5_examples():
    c4 = cycle_graph(4)
    out = cut_dominant_degree5_facets(c4.graph)
    assert sum(q.rhs == 1 for q in out) == 4 and sum(q.rhs == 2 for q in out) == 1
    assert {q.key() for q in out} == oracle_facets(c4).keys()
    out = cut_dominant_degree5_facets(K4.graph)
    assert sum(q.rhs == 1 for q in out) == 16
    assert sum(q.rhs == 2 for q in out) == 3 + 12
    assert {q.key() for q in out} == oracle_facets(K4).keys()
    tree = Graph(tuple("abcx"), (("a", "x"), ("b", "x"), ("c", "x")))
    assert [(q.coeffs, q.rhs) for q in cut_dominant_degree5_facets(tree)] == [((1, 1, 1), 1)]
    many_leaves = Graph(tuple("x123456"), tuple(("x", str(i)) for i in range(1, 7)))
    assert cut_dominant_degree5_facets(many_leaves) == []


def test_degree5_subset_of_oracle_on_prism():
    from steinercut.corpus import prism_graph
    g = prism_graph()
    out = {q.key() for q in cut_dominant_degree5_facets(g)}
    oracle = oracle_facets(SteinerGraph(g, frozenset(g.nodes)))
    assert out <= oracle.keys()
    assert out == {q.key() for q in oracle if q.rhs <= 2}


def test_subdivided_graph_facets_are_not_cacti():
    base = [("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("b", "d")]  # K4 minus an edge
    nodes, edges, terms = list("abcd"), [], []
    for u, v in base:
        x, y = f"{u}{v}1", f"{u}{v}2"
        nodes += [x, y]
        terms += [x, y]
        edges += [(u, x), (x, y), (y, v)]
    sg = SteinerGraph.build(nodes, edges, terms)
    wg = WeightedSteinerGraph(sg)
    assert verify_facet(wg).gamma == 2
    assert classify_tree_cactus(sg) is Kind.NEITHER


def test_guard():
    nodes = [str(i) for i in range(22)]
    big = SteinerGraph.build(nodes, list(zip(nodes, nodes[1:])), nodes[:2])
    with pytest.raises(GuardExceeded):
        enumerate_steiner_subtrees(big)
