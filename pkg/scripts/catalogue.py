"""Enumerate irreducible facet inducing Steiner graphs for a range of
terminal counts and print a summary per entry.

    python scripts/catalogue.py --terminals 3 4 5 --json out.json
    python scripts/catalogue.py --terminals 6 --max-nodes 7
"""

import argparse
import json
import logging
import time

from steinercut.core import format_rational
from steinercut.search import search_irreducible


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--terminals", type=int, nargs="+", default=[3, 4, 5])
    p.add_argument("--max-nodes", type=int, default=None, help="default 3*tau-6")
    p.add_argument("--json", default=None, help="write all entries here")
    p.add_argument("-v", action="store_true")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO if args.v else logging.WARNING)
    dump = {}
    for tau in args.terminals:
        n = args.max_nodes or max(2, 3 * tau - 6)
        t0 = time.perf_counter()
        entries = search_irreducible(tau, n)
        secs = time.perf_counter() - t0
        print(f"tau={tau} max_nodes={n}: {len(entries)} entries in {secs:.1f}s")
        for e in entries:
            g = e.graph.graph
            for w, rhs in e.facet_weights:
                weights = " ".join(format_rational(c) for c in w)
                print(f"  n={g.n} m={g.m} rhs={format_rational(rhs)} weights [{weights}]")
        if entries:
            top = max(r for e in entries for r in e.rhs_values)
            print(f"  observed max rhs {format_rational(top)}, max nodes {max(e.graph.graph.n for e in entries)}")
        dump[tau] = [e.to_dict() for e in entries]
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(dump, fh, indent=2)


if __name__ == "__main__":
    main()
