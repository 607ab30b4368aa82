from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import assume, given, settings

from steinercut.core import Graph, GuardExceeded, SteinerGraph, WeightedSteinerGraph, delta
from steinercut.corpus import (
    complete_graph,
    connected_graphs,
    cycle_graph,
    path_graph,
    prism_graph,
    pyramid_graph,
    tau6_irreducibles,
    to_graph,
)
from steinercut.facets import Inequality, verify_facet
from steinercut.oracle import (
    extreme_rays,
    has_prism_or_pyramid_minor,
    naive_oracle_facets,
    oracle_facets,
    validate_inequality,
)

from strategies import steiner_graphs

TRI = cycle_graph(3)


def facet_pairs(fl):
    return sorted((q.coeffs, q.rhs) for q in fl)


def test_small_examples():
    k2 = SteinerGraph.build("st", [("s", "t")], "st")
    assert facet_pairs(oracle_facets(k2)) == [((1,), 1)]
    assert facet_pairs(oracle_facets(path_graph(3))) == [((1, 1), 1)]


def test_triangle_by_hand():
    # blocker {c >= 0 : c_i + c_j >= 1}: vertices (1,1,0), (1,0,1), (0,1,1), (1/2,1/2,1/2)
    got = facet_pairs(oracle_facets(TRI))
    assert got == sorted([((1, 1, 0), 1), ((1, 0, 1), 1), ((0, 1, 1), 1), ((1, 1, 1), 2)])
    assert got == facet_pairs(naive_oracle_facets(TRI))


def test_extreme_rays_of_orthant_slice():
    # x, y >= 0 and x - y >= 0: rays (1,0) and (1,1)
    assert sorted(extreme_rays([(1, -1)], 2)) == [(1, 0), (1, 1)]


@settings(max_examples=40)
@given(steiner_graphs(max_nodes=6))
def test_double_description_matches_naive(sg):
    assume(sg.graph.m <= 6)
    try:
        naive = naive_oracle_facets(sg)
    except GuardExceeded:
        assume(False)
    assert facet_pairs(oracle_facets(sg, None, None)) == facet_pairs(naive)


def test_naive_cross_check_on_all_small_graphs():
    checked = 0
    for n, es in connected_graphs(5, 5):
        g = to_graph(n, es)
        for k in range(2, n + 1):
            sg = SteinerGraph(g, frozenset(g.nodes[:k]))
            try:
                naive = naive_oracle_facets(sg)
            except GuardExceeded:
                continue
            assert facet_pairs(oracle_facets(sg)) == facet_pairs(naive)
            checked += 1
    assert checked > 50


@settings(max_examples=40)
@given(steiner_graphs(max_nodes=6))
def test_every_facet_is_valid_and_certified(sg):
    assume(sg.graph.m <= 10)
    for q in oracle_facets(sg, None, None):
        assert validate_inequality(sg, q)
        assert q.rhs <= 2 or len(sg.terminals) > 5
        sub = SteinerGraph(sg.graph.subgraph(q.support, sg.terminals), sg.terminals)
        assert verify_facet(WeightedSteinerGraph(sub, tuple(q.coeffs[i] for i in q.support))).gamma == q.rhs


def test_validate_examples():
    assert validate_inequality(TRI, Inequality((1, 1, 1), 2, TRI))
    res = validate_inequality(TRI, Inequality((1, 1, 1), 3, TRI))
    assert not res and len(res.witness) in (1, 2)
    path = path_graph(3)
    res = validate_inequality(path, Inequality((1, 0), 1, path))
    # the violated cut is delta({t}) = {e2}; its canonical side is {s, a}
    assert not res and delta(path, res.witness) == {1}


def test_guards():
    k5 = complete_graph(5)
    big = SteinerGraph.build(k5.nodes + ("6",), k5.edges + (("5", "6"),), k5.nodes)
    with pytest.raises(GuardExceeded):
        oracle_facets(big)
    assert len(oracle_facets(big, max_edges=None)) > 0
    nodes = [str(i) for i in range(8)]
    long_path = SteinerGraph.build(nodes, list(zip(nodes, nodes[1:])), nodes)
    with pytest.raises(GuardExceeded):
        oracle_facets(long_path)


def test_tau6_weights_are_oracle_facets():
    for label, wg in tau6_irreducibles().items():
        keys = oracle_facets(wg.sg).keys()
        assert (wg.weights, F(2 if label == "a" else 4)) in keys


def test_minor_examples():
    assert has_prism_or_pyramid_minor(prism_graph())
    assert has_prism_or_pyramid_minor(pyramid_graph())
    assert has_prism_or_pyramid_minor(complete_graph(6).graph)
    for n, es in connected_graphs(5, 10):
        assert not has_prism_or_pyramid_minor(to_graph(n, es))


def test_minor_negative_six_node_cases():
    k33 = Graph(tuple("abcxyz"), tuple((u, v) for u in "abc" for v in "xyz"))
    assert not has_prism_or_pyramid_minor(k33)
    wheel = Graph(tuple("h12345"), tuple(("h", str(i)) for i in range(1, 6))
                  + tuple((str(i), str(i % 5 + 1)) for i in range(1, 6)))
    assert not has_prism_or_pyramid_minor(wheel)


def test_minor_survives_subdivision_and_extra_parts():
    g = prism_graph()
    edges = list(g.edges)
    u, v = edges.pop(0)
    edges += [(u, "s"), ("s", v), (v, "p")]
    assert has_prism_or_pyramid_minor(Graph(g.nodes + ("s", "p"), tuple(edges)))


def test_minor_guard():
    nodes = tuple(str(i) for i in range(13))
    with pytest.raises(GuardExceeded):
        has_prism_or_pyramid_minor(Graph(nodes, tuple(zip(nodes, nodes[1:]))))


def test_cfp_on_prism_cut_dominant():
    g = prism_graph()
    facets = oracle_facets(SteinerGraph(g, frozenset(g.nodes)))
    assert any(q.rhs > 2 for q in facets)
    assert has_prism_or_pyramid_minor(g)
