"""Ground-truth facets of Steiner cut dominants on small instances.

The non-trivial facets of cut+(G, T) are the vertices of the blocker
B = {c >= 0 : c . chi(delta(S)) >= 1 for all T-Steiner cuts S}.  They are
computed here by exact double description on the homogenized cone
{(c, lam) : c >= 0, lam >= 0, c . chi(delta(S)) - lam >= 0} (integer rays,
combinatorial adjacency test), with a naive tight-subset solver kept as an
independent cross-check for tiny instances.  Nothing in this module uses the
tree/cactus theory or the root-basis certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from .core import GuardExceeded, Graph, SteinerGraph, connected_components
from .cuts import steiner_cut_masks
from .exactla import solve_square_int
from .facets import Inequality, sort_inequalities

MAX_EDGES = 10
MAX_CUTS = 64
MAX_MINOR_NODES = 12


@dataclass(frozen=True)
class FacetList:
    nontrivial: tuple  # normalized Inequality objects, sorted

    def __iter__(self):
        return iter(self.nontrivial)

    def __len__(self):
        return len(self.nontrivial)

    def keys(self) -> set:
        return {q.key() for q in self.nontrivial}


def _guard(sg: SteinerGraph, max_edges, max_cuts):
    if max_edges is not None and sg.graph.m > max_edges:
        raise GuardExceeded(f"oracle limited to {max_edges} edges, got {sg.graph.m}")
    if max_cuts is not None:
        # number of canonical Steiner cuts, known without enumerating
        n, t = sg.graph.n, len(sg.terminals)
        count = (1 << (n - 1)) - (1 << (n - t))
        if count > max_cuts:
            raise GuardExceeded(f"oracle limited to {max_cuts} Steiner cuts, got {count}")


def minimal_cut_masks(sg: SteinerGraph) -> list:
    """Distinct inclusion-minimal edge sets among all T-Steiner cuts.

    Only these matter for the blocker since c >= 0.
    """
    masks = sorted({em for _, em in steiner_cut_masks(sg)}, key=lambda e: (bin(e).count("1"), e))
    keep = []
    for em in masks:
        if not any(k & em == k for k in keep):
            keep.append(em)
    return keep


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _normalize_ray(r: list) -> tuple:
    g = 0
    for x in r:
        g = gcd(g, x)
    return tuple(x // g for x in r) if g > 1 else tuple(r)


def extreme_rays(rows: list, dim: int) -> list:
    """Extreme rays of {x : x >= 0, row . x >= 0 for each row} (pointed).

    Plain double description starting from the orthant; rays are primitive
    integer vectors.  Zero sets are bitmasks over constraint positions
    (0..dim-1 for the orthant, then the rows in order).
    """
    rays = []
    zeros = []
    full = (1 << dim) - 1
    for j in range(dim):
        rays.append(tuple(1 if i == j else 0 for i in range(dim)))
        zeros.append(full & ~(1 << j))
    need = dim - 2
    for k, a in enumerate(rows):
        bit = 1 << (dim + k)
        vals = [sum(x * y for x, y in zip(a, r) if y) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            zeros = [z | bit if vals[i] == 0 else z for i, z in enumerate(zeros)]
            continue
        new_rays = []
        new_zeros = []
        for i, v in enumerate(vals):
            if v >= 0:
                new_rays.append(rays[i])
                new_zeros.append(zeros[i] | bit if v == 0 else zeros[i])
        nz = len(rays)
        for p in pos:
            zp = zeros[p]
            rp = rays[p]
            vp = vals[p]
            for q in neg:
                common = zp & zeros[q]
                if _popcount(common) < need:
                    continue
                adjacent = True
                for r in range(nz):
                    if r != p and r != q and zeros[r] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vq = -vals[q]
                rq = rays[q]
                ray = [vp * y + vq * x for x, y in zip(rp, rq)]
                new_rays.append(_normalize_ray(ray))
                new_zeros.append(common | bit)
        rays, zeros = new_rays, new_zeros
    return rays


def blocker_vertices(sg: SteinerGraph) -> list:
    """Vertices of the blocker as ``(integer coefficient tuple, lam)`` pairs.

    A ray ``(c, lam)`` with ``lam > 0`` is the vertex ``c / lam``.
    """
    m = sg.graph.m
    rows = []
    for em in minimal_cut_masks(sg):
        rows.append(tuple(em >> i & 1 for i in range(m)) + (-1,))
    out = set()
    for r in extreme_rays(rows, m + 1):
        if r[m] > 0:
            out.add(r)
    return sorted(out)


def _to_inequality(sg: SteinerGraph, coeffs, rhs) -> Inequality:
    g = 0
    for x in coeffs:
        g = gcd(g, int(x))
    return Inequality(tuple(Fraction(int(x), g) for x in coeffs), Fraction(rhs) / g, sg, "oracle")


def oracle_facets(sg: SteinerGraph, max_edges: int | None = MAX_EDGES,
                  max_cuts: int | None = MAX_CUTS) -> FacetList:
    """Every non-trivial facet of cut+(G, T), normalized, with rhs = gamma_c.

    Passing ``None`` for a limit disables that guard (used by the search and
    by acceptance runs on slightly larger instances).
    """
    _guard(sg, max_edges, max_cuts)
    m = sg.graph.m
    ineqs = [_to_inequality(sg, r[:m], r[m]) for r in blocker_vertices(sg)]
    return FacetList(tuple(sort_inequalities(ineqs)))


NAIVE_MAX_EDGES = 6
NAIVE_MAX_SYSTEMS = 20_000


def naive_oracle_facets(sg: SteinerGraph) -> FacetList:
    """Brute-force blocker vertices: solve every |E|-subset of constraints.

    Constraints are the distinct cut rows (rhs 1) and nonnegativity rows
    (rhs 0); a basic solution feasible for all of them is a vertex.
    """
    m = sg.graph.m
    if m > NAIVE_MAX_EDGES:
        raise GuardExceeded(f"naive oracle limited to {NAIVE_MAX_EDGES} edges")
    cut_rows = sorted({em for _, em in steiner_cut_masks(sg)})
    rows = [(tuple(em >> i & 1 for i in range(m)), 1) for em in cut_rows]
    rows += [(tuple(1 if i == j else 0 for i in range(m)), 0) for j in range(m)]
    if comb(len(rows), m) > NAIVE_MAX_SYSTEMS:
        raise GuardExceeded("too many tight subsets for the naive oracle")
    vertices = set()
    for pick in combinations(rows, m):
        sol = solve_square_int([r for r, _ in pick], [b for _, b in pick])
        if sol is None:
            continue
        nums, den = sol
        if any(x < 0 for x in nums):
            continue
        if all(sum(a * x for a, x in zip(r, nums)) >= b * den for r, b in rows):
            vertices.add(tuple(Fraction(x, den) for x in nums))
    ineqs = []
    for v in vertices:
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ineqs.append(_to_inequality(sg, [x * den for x in v], den))
    return FacetList(tuple(sort_inequalities(ineqs)))


@dataclass(frozen=True)
class Validation:
    valid: bool
    witness: frozenset | None = None  # canonical node set of a violated cut

    def __bool__(self):
        return self.valid


def validate_inequality(sg: SteinerGraph, ineq: Inequality) -> Validation:
    """Check ``ineq`` on every T-Steiner cut; report the first violated one."""
    g = sg.graph
    for nm, em in steiner_cut_masks(sg):
        lhs = sum((ineq.coeffs[i] for i in range(g.m) if em >> i & 1), Fraction(0))
        if lhs < ineq.rhs:
            return Validation(False, g.nodes_of(nm))
    return Validation(True)


# --- prism / pyramid minors -------------------------------------------------

PRISM = Graph(
    tuple("123456"),
    (("1", "2"), ("2", "3"), ("1", "3"), ("4", "5"), ("5", "6"), ("4", "6"),
     ("1", "4"), ("2", "5"), ("3", "6")),
)
PYRAMID = Graph(
    tuple("1234567"),
    (("1", "2"), ("2", "3"), ("1", "3"), ("1", "4"), ("2", "5"), ("3", "6"),
     ("7", "4"), ("7", "5"), ("7", "6")),
)


def _simple_adjacency(g: Graph) -> dict:
    return {v: set(g.adjacency[v]) for v in g.nodes}


def _series_reduce(adj: dict, contract: bool = True) -> dict:
    """Delete nodes of degree <= 1 and, with ``contract``, suppress nodes of
    degree 2.

    Deletion is safe for both obstructions (minimum degree two).  Suppression
    is only safe for the prism, which has minimum degree three.
    """
    adj = {v: set(ns) for v, ns in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            d = len(adj[v])
            if d <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif d == 2 and contract:
                a, b = adj[v]
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    return adj


def _contains_spanning(host: list, pattern: list, k: int) -> bool:
    """Does the k-node host (adjacency bitmasks) contain the pattern as a
    spanning subgraph under some bijection?"""
    order = sorted(range(k), key=lambda i: -bin(pattern[i]).count("1"))
    image = [-1] * k
    used = 0

    def place(pos: int) -> bool:
        nonlocal used
        if pos == k:
            return True
        x = order[pos]
        for y in range(k):
            if used >> y & 1:
                continue
            if bin(host[y]).count("1") < bin(pattern[x]).count("1"):
                continue
            ok = True
            for prev in order[:pos]:
                if pattern[x] >> prev & 1 and not host[y] >> image[prev] & 1:
                    ok = False
                    break
            if not ok:
                continue
            image[x] = y
            used |= 1 << y
            if place(pos + 1):
                return True
            used &= ~(1 << y)
            image[x] = -1
        return False

    return place(0)


def _pattern_masks(h: Graph) -> list:
    idx = h.index
    masks = [0] * h.n
    for u, v in h.edges:
        masks[idx[u]] |= 1 << idx[v]
        masks[idx[v]] |= 1 << idx[u]
    return masks


def _has_minor_connected(adj: dict, h: Graph) -> bool:
    """Partition the nodes into |V(H)| connected branch sets and test the
    quotient for a spanning copy of H.  Valid for connected hosts since
    unused nodes can always be absorbed into a neighbouring branch set."""
    k = h.n
    nodes = sorted(adj)
    n = len(nodes)
    if n < k or sum(len(s) for s in adj.values()) // 2 < len(h.edges):
        return False
    # breadth-first order so that partial blocks stay near their anchors
    start = nodes[0]
    order = [start]
    seen = {start}
    for v in order:
        for u in sorted(adj[v]):
            if u not in seen:
                seen.add(u)
                order.append(u)
    pos = {v: i for i, v in enumerate(order)}
    nbr = [0] * n
    for v in order:
        for u in adj[v]:
            nbr[pos[v]] |= 1 << pos[u]
    pattern = _pattern_masks(h)
    need_edges = len(h.edges)
    min_deg = min(bin(x).count("1") for x in pattern)
    blocks = [0] * k

    def connected(mask: int) -> bool:
        low = mask & -mask
        reach = low
        frontier = low
        while frontier:
            f = frontier
            grow = 0
            while f:
                b = f & -f
                grow |= nbr[b.bit_length() - 1]
                f ^= b
            grow &= mask & ~reach
            reach |= grow
            frontier = grow
        return reach == mask

    def finish() -> bool:
        if not all(connected(b) for b in blocks):
            return False
        quotient = [0] * k
        for i in range(k):
            touch = 0
            b = blocks[i]
            while b:
                low = b & -b
                touch |= nbr[low.bit_length() - 1]
                b ^= low
            for j in range(k):
                if j != i and touch & blocks[j]:
                    quotient[i] |= 1 << j
        if sum(bin(q).count("1") for q in quotient) // 2 < need_edges:
            return False
        if any(bin(q).count("1") < min_deg for q in quotient):
            return False
        return _contains_spanning(quotient, pattern, k)

    def assign(i: int, used: int) -> bool:
        if n - i < k - used:
            return False
        if i == n:
            return finish()
        bit = 1 << i
        for b in range(min(used + 1, k)):
            blocks[b] |= bit
            if assign(i + 1, max(used, b + 1)):
                return True
            blocks[b] &= ~bit
        return False

    return assign(0, 0)


def has_prism_or_pyramid_minor(g: Graph) -> bool:
    """Whether G has a minor isomorphic to the prism or the pyramid."""
    if g.n > MAX_MINOR_NODES:
        raise GuardExceeded(f"minor test limited to {MAX_MINOR_NODES} nodes")
    adj = _simple_adjacency(g)
    for comp in connected_components(g):
        base = {v: adj[v] & comp for v in comp}
        for h, contract in ((PRISM, True), (PYRAMID, False)):
            sub = _series_reduce(base, contract)
            # deletions may split the piece, so test each remaining component
            for piece in _components(sub):
                if len(piece) < h.n:
                    continue
                part = {v: sub[v] & piece for v in piece}
                if _has_minor_connected(part, h):
                    return True
    return False


def _components(adj: dict) -> list:
    seen = set()
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        out.append(comp)
    return out

