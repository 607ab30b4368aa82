"""Look for all-terminal facets with rhs above two on small graphs and
check each host for a prism or pyramid minor.

    python scripts/minor_check.py --nodes 6 7 --max-edges 10
"""

import argparse
import time

from steinercut.core import SteinerGraph
from steinercut.corpus import connected_graphs, to_graph
from steinercut.oracle import has_prism_or_pyramid_minor, oracle_facets


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--nodes", type=int, nargs="+", default=[6, 7])
    p.add_argument("--max-edges", type=int, default=10)
    args = p.parse_args()
    for n in args.nodes:
        t0 = time.perf_counter()
        graphs = [to_graph(k, es) for k, es in connected_graphs(n, args.max_edges) if k == n]
        big = bad = 0
        for g in graphs:
            fl = oracle_facets(SteinerGraph(g, frozenset(g.nodes)), max_edges=None, max_cuts=None)
            rhs = max((q.rhs for q in fl), default=0)
            if rhs > 2:
                big += 1
                if not has_prism_or_pyramid_minor(g):
                    bad += 1
                    print("counterexample:", g.edges)
        print(f"n={n}: {len(graphs)} graphs, {big} with rhs > 2, {bad} without minor, "
              f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
