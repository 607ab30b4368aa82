"""Command line front end.

Exit codes: 0 success, 2 invalid input, 3 guard exceeded, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import (
    GuardExceeded,
    SteinerCutError,
    SteinerGraph,
    WeightedSteinerGraph,
    format_rational,
    load_graph,
    steiner_graph_to_dict,
)
from .cuts import MAX_ENUM_NODES, gamma, roots, steiner_min_cut_maxflow
from .facets import Inequality, facet_status, sort_inequalities, steiner_degree
from .laminar import laminar_root_basis, minimal_members, width
from .oracle import oracle_facets
from .search import search_irreducible
from .transforms import glue, reduce, split_at_cut_node, subdivide, ydelta
from .treecactus import cut_dominant_degree5_facets, enumerate_facets_le5

EXIT_OK, EXIT_INVALID, EXIT_GUARD, EXIT_INTERNAL = 0, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _weighted(obj) -> WeightedSteinerGraph:
    return obj if isinstance(obj, WeightedSteinerGraph) else WeightedSteinerGraph(obj)


def _plain(obj) -> SteinerGraph:
    return obj.sg if isinstance(obj, WeightedSteinerGraph) else obj


def _check_size(sg: SteinerGraph, max_size):
    if max_size is not None and sg.graph.m > max_size:
        raise GuardExceeded(f"graph has {sg.graph.m} edges, --max-size is {max_size}")


def _cut_list(g, sets) -> list:
    order = g.graph.index
    return [sorted(s, key=order.get) for s in sets]


def cmd_mincut(args, obj):
    wg = _weighted(obj)
    if args.method == "maxflow" or wg.graph.n > MAX_ENUM_NODES:
        value, side = steiner_min_cut_maxflow(wg)
        witness = side
    else:
        rl = roots(wg)
        value = rl.gamma
        witness = min(rl.roots, key=lambda s: (len(s), sorted(s)))
    res = {"gamma": format_rational(value), "witness": _cut_list(wg.sg, [witness])[0]}
    text = f"gamma = {res['gamma']}, witness S = {{{', '.join(res['witness'])}}}"
    return res, text


def cmd_facets(args, obj):
    sg = _plain(obj)
    if args.degree5:
        ineqs = cut_dominant_degree5_facets(sg.graph)
        host = SteinerGraph(sg.graph, frozenset(sg.graph.nodes))
        ineqs = [Inequality(q.coeffs, q.rhs, host, q.kind) for q in ineqs]
    elif args.method == "classify":
        ineqs = enumerate_facets_le5(sg)
    else:
        ineqs = list(oracle_facets(sg))
    ineqs = sort_inequalities(ineqs)
    return [q.to_dict() for q in ineqs], "\n".join(str(q) for q in ineqs)


def cmd_verify(args, obj):
    wg = _weighted(obj)
    ok, info = facet_status(wg)
    if not ok:
        return {"facet": False, "reason": info}, f"not a facet: {info}"
    basis = laminar_root_basis(wg, check=False)
    res = {"facet": True, "gamma": format_rational(info.gamma), "root_basis": _cut_list(wg.sg, basis)}
    text = f"facet, gamma = {res['gamma']}, laminar root basis of {len(basis)} sets"
    return res, text


def cmd_laminar(args, obj):
    wg = _weighted(obj)
    basis = laminar_root_basis(wg)
    res = {
        "basis": _cut_list(wg.sg, basis),
        "minimal": _cut_list(wg.sg, minimal_members(basis)),
        "width": width(basis),
    }
    lines = ["{" + ", ".join(s) + "}" for s in res["basis"]]
    return res, "\n".join(lines + [f"width = {res['width']}"])


def cmd_degree(args, obj):
    wg = _weighted(obj)
    all_terms = SteinerGraph(wg.graph, frozenset(wg.graph.nodes))
    rhs = Fraction(args.rhs) if args.rhs else gamma(WeightedSteinerGraph(all_terms, wg.weights))
    k = steiner_degree(wg.graph, Inequality(wg.weights, rhs, all_terms))
    return {"steiner_degree": k}, f"Steiner degree {k}"


def cmd_transform(args, obj):
    wg = _weighted(obj)
    op = args.op
    if op == "subdivide":
        out = steiner_graph_to_dict(subdivide(wg, args.edge, args.new_node))
    elif op == "reduce":
        out = steiner_graph_to_dict(reduce(wg, args.node))
    elif op == "glue":
        other = _weighted(load_graph(_read(args.other)))
        out = steiner_graph_to_dict(glue(wg, other, args.node, args.other_node, args.keep_terminal))
    elif op == "split":
        a, b = split_at_cut_node(wg, args.node)
        out = {"pieces": [steiner_graph_to_dict(a), steiner_graph_to_dict(b)]}
    else:
        res = ydelta(wg, args.node)
        out = {
            "raw": steiner_graph_to_dict(res.raw),
            "raw_gamma": format_rational(res.raw_gamma),
            "normalized": steiner_graph_to_dict(res.normalized),
            "normalized_gamma": format_rational(res.normalized_gamma),
        }
    return out, json.dumps(out, indent=2)


def cmd_search(args, _):
    entries = search_irreducible(args.terminals, args.max_nodes)
    data = [e.to_dict() for e in entries]
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(data, fh, indent=2)
    lines = [f"{len(entries)} entries"]
    for e in entries:
        rhs = ",".join(format_rational(r) for r in e.rhs_values)
        lines.append(f"n={e.graph.graph.n} m={e.graph.graph.m} rhs={rhs}")
    return data, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="graph JSON path, or - for stdin")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-size", type=int, default=None,
                        help="refuse graphs with more edges (can only tighten built-in guards)")
    p = argparse.ArgumentParser(prog="steinercut", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mincut", parents=[common])
    s.add_argument("--method", choices=("enumerate", "maxflow"), default="enumerate")
    s.set_defaults(func=cmd_mincut)

    s = sub.add_parser("facets", parents=[common])
    s.add_argument("--method", choices=("classify", "oracle"), default="classify")
    s.add_argument("--degree5", action="store_true",
                   help="cut dominant facets of Steiner degree at most five (terminals ignored)")
    s.set_defaults(func=cmd_facets)

    s = sub.add_parser("verify", parents=[common])
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("laminar-basis", parents=[common])
    s.set_defaults(func=cmd_laminar)

    s = sub.add_parser("steiner-degree", parents=[common])
    s.add_argument("--rhs", default=None, help="right-hand side (default: min cut over all nodes)")
    s.set_defaults(func=cmd_degree)

    s = sub.add_parser("transform", parents=[common])
    s.add_argument("--op", choices=("subdivide", "reduce", "glue", "split", "ydelta"), required=True)
    s.add_argument("--edge", type=int)
    s.add_argument("--new-node")
    s.add_argument("--node")
    s.add_argument("--other", help="second graph for glue")
    s.add_argument("--other-node")
    s.add_argument("--keep-terminal", action="store_true")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("search-irreducible", parents=[common])
    s.add_argument("--terminals", type=int, required=True)
    s.add_argument("--max-nodes", type=int, required=True)
    s.add_argument("--output", default=None)
    s.set_defaults(func=cmd_search)
    return p


_REQUIRED = {
    "subdivide": ("edge", "new_node"),
    "reduce": ("node",),
    "glue": ("node", "other", "other_node"),
    "split": ("node",),
    "ydelta": ("node",),
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "transform":
            missing = [f for f in _REQUIRED[args.op] if getattr(args, f) is None]
            if missing:
                raise SteinerCutError(f"--op {args.op} needs --{missing[0].replace('_', '-')}")
        obj = None
        if args.command != "search-irreducible":
            obj = load_graph(_read(args.input))
            _check_size(_plain(obj), args.max_size)
        elif args.max_size is not None and args.max_nodes > args.max_size:
            raise GuardExceeded(f"--max-nodes {args.max_nodes} exceeds --max-size {args.max_size}")
        data, text = args.func(args, obj)
    except GuardExceeded as exc:
        print(f"error: guard exceeded: {exc}", file=stderr)
        return EXIT_GUARD
    except (SteinerCutError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except Exception as exc:  # invariant violations only
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    print(text if args.format == "text" else json.dumps(data), file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
