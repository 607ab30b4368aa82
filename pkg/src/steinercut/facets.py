"""Facet certification for Steiner cut dominants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import (
    GuardExceeded,
    Graph,
    SteinerCutError,
    SteinerGraph,
    WeightedSteinerGraph,
    connected_components,
    cut_nodes,
    format_rational,
)
from .cuts import root_masks
from .exactla import EchelonBasis, is_minimum_integer_form, scale_to_minimum_integer_form


class NotMinimumIntegerForm(SteinerCutError):
    pass


class GammaZero(SteinerCutError):
    pass


class NotFacet(SteinerCutError):
    """The weights do not define a facet; ``reason`` is machine readable."""

    def __init__(self, reason: str, rank: int | None = None, needed: int | None = None):
        self.reason = reason
        self.rank = rank
        self.needed = needed
        detail = f" (rank {rank} < {needed})" if rank is not None else ""
        super().__init__(f"{reason}{detail}")


class NotAFacetOfCutDominant(SteinerCutError):
    pass


@dataclass(frozen=True)
class Inequality:
    """``coeffs . x >= rhs`` over the edge space of ``host``."""

    coeffs: tuple
    rhs: Fraction
    host: SteinerGraph = field(compare=False)
    kind: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        if any(c < 0 for c in self.coeffs):
            raise SteinerCutError("inequality coefficients must be nonnegative")

    @property
    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)

    def normalized(self) -> "Inequality":
        c, r = scale_to_minimum_integer_form(self.coeffs, self.rhs)
        return Inequality(c, r, self.host, self.kind)

    def key(self) -> tuple:
        n = self.normalized()
        return n.coeffs, n.rhs

    def sort_key(self) -> tuple:
        return self.rhs, self.coeffs

    def to_dict(self) -> dict:
        return {
            "coeffs": {str(i): format_rational(self.coeffs[i]) for i in self.support},
            "rhs": format_rational(self.rhs),
            "support_size": len(self.support),
            "kind": self.kind,
        }

    def __str__(self):
        terms = []
        for i in self.support:
            u, v = self.host.edges[i]
            c = self.coeffs[i]
            terms.append(f"{'' if c == 1 else format_rational(c)}x[{u}{v}]")
        return " + ".join(terms) + f" >= {format_rational(self.rhs)}"


def sort_inequalities(ineqs) -> list:
    return sorted(ineqs, key=Inequality.sort_key)


@dataclass(frozen=True)
class FacetCertificate:
    roots: tuple  # canonical node sets, |support| many
    gamma: Fraction


def _independent_roots(wg: WeightedSteinerGraph, support: list):
    gam, rms = root_masks(wg)
    basis = EchelonBasis(len(support))
    chosen = []
    for nm, em in rms:
        row = [em >> i & 1 for i in support]
        if basis.add(row):
            chosen.append(nm)
            if basis.full:
                break
    return gam, chosen, len(basis)


def verify_facet(wg: WeightedSteinerGraph) -> FacetCertificate:
    """Certify ``c x >= gamma_c`` as a facet of the dominant of (G_c, T).

    Raises NotMinimumIntegerForm / GammaZero on violated preconditions and
    NotFacet when the roots do not span the support's edge space.
    """
    if not is_minimum_integer_form(wg.weights):
        raise NotMinimumIntegerForm("weights are not in minimum integer form")
    support = [i for i, w in enumerate(wg.weights) if w != 0]
    gam, chosen, rk = _independent_roots(wg, support)
    if gam == 0:
        raise GammaZero("minimum Steiner cut weight is zero")
    if rk < len(support):
        raise NotFacet("rank", rank=rk, needed=len(support))
    g = wg.graph
    return FacetCertificate(tuple(g.nodes_of(nm) for nm in chosen), gam)


def facet_status(wg: WeightedSteinerGraph) -> tuple:
    """``(True, certificate)`` or ``(False, reason)`` for facet inducing-ness."""
    if any(w == 0 for w in wg.weights):
        return False, "zero-weight edge"
    try:
        cert = verify_facet(wg)
    except NotMinimumIntegerForm:
        return False, "not minimum integer form"
    except GammaZero:
        return False, "gamma=0"
    except NotFacet as exc:
        return False, f"rank={exc.rank}<{exc.needed}"
    return True, cert


def is_facet_inducing(wg: WeightedSteinerGraph) -> bool:
    return facet_status(wg)[0]


STRUCTURAL_PROPERTIES = {
    1: "graph is connected",
    2: "every nonterminal has degree at least two",
    3: "the facet is bounded (all weights positive)",
    4: "both shores of every root induce connected subgraphs",
    5: "every edge lies in some root",
    6: "every component of G - v contains a terminal",
    7: "c(e) <= gamma with equality exactly on bridges",
}


def structural_check(wg: WeightedSteinerGraph) -> list:
    """Necessary conditions for facet weights; returns the violated items.

    Each entry is ``"k: description"`` with k numbering the property.
    """
    g = wg.graph
    sg = wg.sg
    violated = set()
    if len(connected_components(g)) != 1:
        violated.add(1)
    if any(g.degree(v) < 2 for v in g.nodes if v not in sg.terminals):
        violated.add(2)
    if any(w == 0 for w in wg.weights):
        violated.add(3)
    gam, rms = root_masks(wg)
    full = (1 << g.n) - 1
    covered = 0
    for nm, em in rms:
        covered |= em
        for side in (nm, full & ~nm):
            if len(connected_components(g, removed_nodes=g.nodes_of(full & ~side))) != 1:
                violated.add(4)
    if covered != (1 << g.m) - 1:
        violated.add(5)
    for v in g.nodes:
        for comp in connected_components(g, {v}):
            if not comp & sg.terminals:
                violated.add(6)
    base = len(connected_components(g))
    for i, w in enumerate(wg.weights):
        is_bridge = len(connected_components(g, removed_edges={i})) > base
        if w > gam or (w == gam) != is_bridge:
            violated.add(7)
    return [f"{k}: {STRUCTURAL_PROPERTIES[k]}" for k in sorted(violated)]


def is_irreducible(g: SteinerGraph) -> bool:
    """No cut node and no nonterminal of degree two."""
    graph = g.graph
    if cut_nodes(graph):
        return False
    return not any(graph.degree(v) == 2 for v in graph.nodes if v not in g.terminals)


MAX_DEGREE_NODES = 10


def defines_facet(sg: SteinerGraph, ineq: Inequality) -> bool:
    """Whether ``ineq`` (any scaling) defines a facet of cut+(G, T)."""
    c, rhs = scale_to_minimum_integer_form(ineq.coeffs, ineq.rhs)
    wg = WeightedSteinerGraph(sg, c)
    support = [i for i, w in enumerate(c) if w != 0]
    gam, _, rk = _independent_roots(wg, support)
    return gam == rhs and rhs > 0 and rk == len(support)


def steiner_degree(g: Graph, ineq: Inequality) -> int:
    """Smallest |T| for which the inequality is a facet of cut+(G, T)."""
    if g.n > MAX_DEGREE_NODES:
        raise GuardExceeded(f"steiner_degree limited to {MAX_DEGREE_NODES} nodes")
    if not defines_facet(SteinerGraph(g, frozenset(g.nodes)), ineq):
        raise NotAFacetOfCutDominant("inequality is not a facet of the cut dominant")
    for k in range(2, g.n + 1):
        for terms in combinations(g.nodes, k):
            if defines_facet(SteinerGraph(g, frozenset(terms)), ineq):
                return k
    raise AssertionError("unreachable: T = V(G) succeeds")
