from fractions import Fraction as F
from itertools import combinations, permutations

import pytest
from hypothesis import given

from steinercut.core import GuardExceeded, InvalidGraph, SteinerCutError, SteinerGraph, WeightedSteinerGraph, delta
from steinercut.corpus import cycle_graph, tau6_irreducibles
from steinercut.cuts import roots
from steinercut.facets import is_irreducible, structural_check, verify_facet
from steinercut.search import (
    candidate_steiner_graphs,
    canonical_form,
    canonical_graph,
    search_irreducible,
    steiner_isomorphic,
)

from strategies import steiner_graphs


@pytest.fixture(scope="module")
def catalogue():
    return {tau: search_irreducible(tau, 3 * tau - 6) for tau in (3, 4, 5)} | {6: search_irreducible(6, 7)}


def c4(terms):
    return cycle_graph(4, [str(t) for t in terms])


def test_isomorphism_examples():
    assert steiner_isomorphic(c4([1, 3]), c4([2, 4]))
    assert not steiner_isomorphic(c4([1, 2]), c4([1, 3]))
    g = tau6_irreducibles()["e"].sg
    assert steiner_isomorphic(g, g)


def _relabel(sg, perm):
    ren = dict(zip(sg.graph.nodes, perm))
    return SteinerGraph.build([ren[v] for v in sg.graph.nodes], [(ren[a], ren[b]) for a, b in sg.graph.edges],
                              [ren[t] for t in sg.terminals])


@given(steiner_graphs(max_nodes=6))
def test_canonical_form_is_invariant(sg):
    perm = list(reversed(sg.graph.nodes))
    other = _relabel(sg, perm)
    assert canonical_form(sg) == canonical_form(other)
    assert steiner_isomorphic(sg, canonical_graph(sg))


def test_canonical_form_separates_brute_force_classes():
    # four nodes, all connected edge sets and terminal sets: classes match brute-force orbits
    nodes = ["1", "2", "3", "4"]
    pairs = list(combinations(nodes, 2))
    graphs = []
    for k in range(1, 7):
        for es in combinations(pairs, k):
            for terms in (["1", "2"], ["1", "3"], ["1", "2", "3"], nodes):
                try:
                    graphs.append(SteinerGraph.build(nodes, list(es), terms))
                except InvalidGraph:
                    break

    def brute(sg):
        best = None
        for p in permutations(range(4)):
            ren = {v: p[i] for i, v in enumerate(nodes)}
            code = (tuple(sorted(ren[t] for t in sg.terminals)),
                    tuple(sorted(tuple(sorted((ren[a], ren[b]))) for a, b in sg.graph.edges)))
            best = code if best is None or code < best else best
        return best

    by_brute = {}
    by_canon = {}
    for sg in graphs:
        by_brute.setdefault(brute(sg), set()).add(canonical_form(sg))
        by_canon.setdefault(canonical_form(sg), set()).add(brute(sg))
    assert all(len(s) == 1 for s in by_brute.values())
    assert all(len(s) == 1 for s in by_canon.values())


def test_steiner_edge_and_guards():
    (entry,) = search_irreducible(2, 2)
    assert entry.graph.graph.m == 1 and entry.rhs_values == (F(1),)
    with pytest.raises(SteinerCutError):
        search_irreducible(1, 3)
    with pytest.raises(GuardExceeded):
        search_irreducible(4, 7)
    with pytest.raises(GuardExceeded):
        search_irreducible(6, 13)


@pytest.mark.parametrize("tau", [3, 4, 5])
def test_small_tau_gives_only_the_cycle(catalogue, tau):
    (entry,) = catalogue[tau]
    assert steiner_isomorphic(entry.graph, cycle_graph(tau))
    assert entry.facet_weights == (((F(1),) * tau, F(2)),)


def test_tau6_matches_known_list(catalogue):
    entries = catalogue[6]
    assert sorted(entry.rhs_values for entry in entries) == [(F(2),), (F(4),), (F(4),), (F(4),), (F(4),)]
    fig = tau6_irreducibles()
    for label, wg in fig.items():
        match = [e for e in entries if steiner_isomorphic(e.graph, wg.sg)]
        assert len(match) == 1, label
        assert sorted(match[0].facet_weights[0][0]) == sorted(wg.weights)
    assert any(F(3) in w for e in entries for w, _ in e.facet_weights)


def _entries(catalogue):
    return [e for tau in catalogue for e in catalogue[tau]]


def test_entries_are_irreducible_certified_facets(catalogue):
    for e in _entries(catalogue):
        assert is_irreducible(e.graph)
        for w, rhs in e.facet_weights:
            wg = WeightedSteinerGraph(e.graph, w)
            assert verify_facet(wg).gamma == rhs
            assert structural_check(wg) == []


def test_bounds_and_terminal_stars_in_equality_cases(catalogue):
    for tau, entries in catalogue.items():
        for e in entries:
            n, m = e.graph.graph.n, e.graph.graph.m
            assert m <= n + tau - 3 and n <= 3 * tau - 6
            if m == n + tau - 3 or n == 3 * tau - 6:
                for w, _ in e.facet_weights:
                    rl = roots(WeightedSteinerGraph(e.graph, w))
                    stars = {frozenset(delta(e.graph, {t})) for t in e.graph.terminals}
                    found = {frozenset(delta(e.graph, s)) for s in rl.roots}
                    assert stars <= found


def _hamiltonian_cycles(sg):
    g = sg.graph
    first = g.nodes[0]
    for rest in permutations(g.nodes[1:]):
        if rest[0] > rest[-1]:
            continue
        cyc = (first,) + rest
        if all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))):
            yield cyc


def _crossing_pair(cyc, chords) -> bool:
    pos = {v: i for i, v in enumerate(cyc)}
    for (a, b), (c, d) in combinations(chords, 2):
        if len({a, b, c, d}) < 4:
            continue
        lo, hi = sorted((pos[a], pos[b]))
        if (lo < pos[c] < hi) != (lo < pos[d] < hi):
            return True
    return False


def test_hamiltonian_cycles_have_crossing_chords(catalogue):
    for e in _entries(catalogue):
        g = e.graph.graph
        for cyc in _hamiltonian_cycles(e.graph):
            ring = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
            chords = [ed for ed in g.edges if frozenset(ed) not in ring]
            if chords:
                assert _crossing_pair(cyc, chords)


def test_candidates_respect_filters():
    for sg in candidate_steiner_graphs(5, 7):
        g = sg.graph
        assert all(g.degree(v) >= (2 if v in sg.terminals else 3) for v in g.nodes)
        assert g.m <= g.n + 5 - 3
        assert is_irreducible(sg)
