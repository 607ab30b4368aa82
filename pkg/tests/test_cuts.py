import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from steinercut.core import GuardExceeded, Graph, SteinerGraph, WeightedSteinerGraph, delta, is_steiner_cut
from steinercut.cuts import (
    enumerate_steiner_cuts,
    gamma,
    max_flow_min_cut,
    roots,
    steiner_min_cut_maxflow,
)

from strategies import weighted_graphs

PATH = SteinerGraph.build("sat", [("s", "a"), ("a", "t")], "st")
K2 = SteinerGraph.build("st", [("s", "t")], "st")
TRI = SteinerGraph.build("123", [("1", "2"), ("2", "3"), ("1", "3")], "123")
C4 = SteinerGraph.build("1234", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")], "1234")
C5 = SteinerGraph.build("12345", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")], "12345")


def brute_cut_edge_sets(sg):
    nodes = list(sg.nodes)
    out = set()
    for mask in range(1, (1 << len(nodes)) - 1):
        s = {v for i, v in enumerate(nodes) if mask >> i & 1}
        if is_steiner_cut(sg, s):
            out.add(frozenset(delta(sg, s)))
    return out


def test_enumerate_examples():
    # the two Steiner cuts of the path are {s} and {s,a}
    assert sorted(map(sorted, enumerate_steiner_cuts(PATH))) == [["a", "s"], ["s"]]
    assert enumerate_steiner_cuts(K2) == [frozenset("s")]
    cuts = enumerate_steiner_cuts(C4)
    assert len(cuts) == 7 and all("4" not in s for s in cuts)


@given(weighted_graphs())
def test_enumeration_is_exhaustive_and_unique(wg):
    sg = wg.sg
    cuts = enumerate_steiner_cuts(sg)
    assert len(set(cuts)) == len(cuts)
    assert all(sg.anchor not in s and is_steiner_cut(sg, s) for s in cuts)
    assert {frozenset(delta(sg, s)) for s in cuts} == brute_cut_edge_sets(sg)
    assert len(cuts) == 2 ** (sg.graph.n - 1) - 2 ** (sg.graph.n - len(sg.terminals))


def test_enumerate_guard():
    n = 25
    nodes = [str(i) for i in range(n)]
    big = SteinerGraph.build(nodes, list(zip(nodes, nodes[1:])), nodes[:2])
    with pytest.raises(GuardExceeded):
        enumerate_steiner_cuts(big)


def test_gamma_examples():
    assert gamma(WeightedSteinerGraph(PATH)) == 1
    assert gamma(WeightedSteinerGraph(TRI)) == 2
    nodes = list("abcdef")
    edges = [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f"), ("c", "d")]
    bridge = WeightedSteinerGraph(SteinerGraph.build(nodes, edges, ["a", "b", "e", "f"]), (1,) * 6 + (2,))
    assert gamma(bridge) == 2 == gamma(bridge, "maxflow")


def test_roots_examples():
    rl = roots(WeightedSteinerGraph(PATH))
    assert rl.gamma == 1 and set(rl.roots) == {frozenset("s"), frozenset("sa")}
    rl = roots(WeightedSteinerGraph(C5))
    assert rl.gamma == 2 and len(rl.roots) == 10
    assert all(len(delta(C5, s)) == 2 for s in rl.roots)
    rl = roots(WeightedSteinerGraph(K2))
    assert rl.gamma == 1 and rl.roots == (frozenset("s"),)


def test_max_flow_examples():
    g = PATH.graph
    value, side = max_flow_min_cut(g, (1, 1), "s", "t")
    assert value == 1 and side in ({"s"}, {"s", "a"})
    two = Graph(tuple("sabt"), (("s", "a"), ("a", "t"), ("s", "b"), ("b", "t")))
    assert max_flow_min_cut(two, (1, 1, 1, 1), "s", "t")[0] == 2
    assert max_flow_min_cut(g, (1, F(1, 2)), "s", "t") == (F(1, 2), frozenset("sa"))


def test_max_flow_disconnected_pair_has_value_zero():
    g = Graph(tuple("sat"), (("s", "a"),))
    assert max_flow_min_cut(g, (1,), "s", "t") == (0, frozenset("sa"))


@given(weighted_graphs())
def test_roots_have_weight_gamma(wg):
    rl = roots(wg)
    weights = [wg.cut_weight(s) for s in enumerate_steiner_cuts(wg.sg)]
    assert min(weights) == rl.gamma
    assert all(wg.cut_weight(s) == rl.gamma for s in rl.roots)
    assert len(rl.roots) == weights.count(rl.gamma)


@given(weighted_graphs())
def test_gamma_methods_agree(wg):
    value, side = steiner_min_cut_maxflow(wg)
    assert gamma(wg) == value
    assert is_steiner_cut(wg.sg, side) and wg.cut_weight(side) == value
