"""Laminar families of node sets and laminar root bases."""

from __future__ import annotations

from fractions import Fraction

from .core import SteinerCutError, WeightedSteinerGraph, delta, is_steiner_cut, validate_cut
from .cuts import root_masks
from .exactla import EchelonBasis
from .facets import facet_status


class NotLaminar(SteinerCutError):
    pass


class EmptyFamily(SteinerCutError):
    pass


class NotRoots(SteinerCutError):
    pass


class NotIntersecting(SteinerCutError):
    pass


class UncrossingFailed(SteinerCutError):
    pass


class NotFacetInducing(SteinerCutError):
    pass


def sets_intersect(a, b) -> bool:
    a, b = set(a), set(b)
    return bool(a & b) and bool(a - b) and bool(b - a)


def is_laminar(fam) -> bool:
    fam = [frozenset(s) for s in fam]
    if any(not s for s in fam) or len(set(fam)) != len(fam):
        return False
    return not any(sets_intersect(a, b) for i, a in enumerate(fam) for b in fam[i + 1:])


def _require_laminar(fam) -> list:
    fam = [frozenset(s) for s in fam]
    if not is_laminar(fam):
        raise NotLaminar("family is not laminar")
    return fam


def minimal_members(fam) -> list:
    fam = _require_laminar(fam)
    return [s for s in fam if not any(t < s for t in fam)]


def maximal_members(fam) -> list:
    fam = _require_laminar(fam)
    return [s for s in fam if not any(s < t for t in fam)]


def intersecting_members(s, fam) -> list:
    """Members of ``fam`` that intersect ``s`` (I(S, L))."""
    return [frozenset(m) for m in fam if sets_intersect(s, m)]


def width(fam) -> int:
    fam = _require_laminar(fam)
    if not fam:
        raise EmptyFamily("width of an empty family")
    extra = 1 if len(maximal_members(fam)) == 1 else 0
    return len(minimal_members(fam)) + extra


def laminar_bound_check(fam, ground) -> bool:
    """|L| <= |V| + |L_min| - 1 for a laminar family of subsets of ``ground``."""
    fam = _require_laminar(fam)
    return len(fam) <= len(set(ground)) + len(minimal_members(fam)) - 1


def _incidence(wg: WeightedSteinerGraph, s) -> list:
    d = delta(wg.sg, s)
    return [1 if i in d else 0 for i in range(wg.graph.m)]


def _is_root(wg: WeightedSteinerGraph, s, gam) -> bool:
    if not s or len(s) == wg.graph.n or not is_steiner_cut(wg.sg, s):
        return False
    return wg.cut_weight(s) == gam


def uncross(wg: WeightedSteinerGraph, s1, s2, gam: Fraction | None = None) -> tuple:
    """Replace two intersecting roots by a non-intersecting root pair.

    Returns ``(A, B, kind)`` with kind ``"cap_cup"`` (A = S1&S2, B = S1|S2) or
    ``"diff"`` (A = S1-S2, B = S2-S1); the incidence vectors of A and B sum to
    those of S1 and S2.  cap_cup is preferred when both qualify.
    """
    s1 = validate_cut(wg.sg, s1)
    s2 = validate_cut(wg.sg, s2)
    if gam is None:
        gam = root_masks(wg)[0]
    if not (_is_root(wg, s1, gam) and _is_root(wg, s2, gam)):
        raise NotRoots("both sets must define roots")
    if not sets_intersect(s1, s2):
        raise NotIntersecting("sets do not intersect")
    target = [x + y for x, y in zip(_incidence(wg, s1), _incidence(wg, s2))]
    for a, b, kind in ((s1 & s2, s1 | s2, "cap_cup"), (s1 - s2, s2 - s1, "diff")):
        if _is_root(wg, a, gam) and _is_root(wg, b, gam):
            if [x + y for x, y in zip(_incidence(wg, a), _incidence(wg, b))] == target:
                return a, b, kind
    raise UncrossingFailed("no uncrossed root pair found")


def _cut_key(s) -> tuple:
    return tuple(sorted(s))


def laminar_root_basis(wg: WeightedSteinerGraph, check: bool = True) -> list:
    """A laminar family of canonical root sets whose cuts form a basis.

    Grows a maximal laminar independent family of roots (terminal singletons
    first), then repeatedly takes an outside-span root with the fewest
    intersecting members and uncrosses it against the family until it can
    be added.
    """
    if check:
        ok, why = facet_status(wg)
        if not ok:
            raise NotFacetInducing(f"not facet inducing: {why}")
    g = wg.graph
    sg = wg.sg
    m = g.m
    gam, rms = root_masks(wg)
    all_roots = [g.nodes_of(nm) for nm, _ in rms]
    singletons = sorted(
        (s for s in all_roots if len(s) == 1 and next(iter(s)) in sg.terminals), key=_cut_key
    )
    others = sorted((s for s in all_roots if s not in set(singletons)), key=lambda s: (len(s), _cut_key(s)))

    basis = EchelonBasis(m)
    fam = []
    for s in singletons + others:
        if not intersecting_members(s, fam) and basis.add(_incidence(wg, s)):
            fam.append(s)

    while not basis.full:
        outside = [s for s in all_roots if s not in fam and not basis.contains(_incidence(wg, s))]
        s = min(outside, key=lambda x: (len(intersecting_members(x, fam)), _cut_key(x)))
        while True:
            crossing = intersecting_members(s, fam)
            if not crossing:
                break
            member = min(crossing, key=_cut_key)
            a, b, _ = uncross(wg, s, member, gam)
            a_out = not basis.contains(_incidence(wg, a))
            s = a if a_out else b
        # canonical inputs stay canonical: all four uncrossed sets avoid the anchor
        if basis.add(_incidence(wg, s)):
            fam.append(s)
    return fam
