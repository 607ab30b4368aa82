"""Compare the tree/cactus facet list with brute-force oracle facets over
every small Steiner graph and report counts of facets by kind and rhs.

    python scripts/compare_classify_oracle.py --max-nodes 5 --max-edges 8
"""

import argparse
import time
from collections import Counter

from steinercut.corpus import connected_graphs, terminal_assignments, to_graph
from steinercut.oracle import oracle_facets
from steinercut.treecactus import enumerate_facets_le5


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-nodes", type=int, default=5)
    p.add_argument("--max-edges", type=int, default=8)
    args = p.parse_args()
    t0 = time.perf_counter()
    instances = mismatches = 0
    kinds = Counter()
    for n, es in connected_graphs(args.max_nodes, args.max_edges):
        for sg in terminal_assignments(to_graph(n, es), [2, 3, 4, 5]):
            instances += 1
            mine = enumerate_facets_le5(sg)
            if {q.key() for q in mine} != oracle_facets(sg).keys():
                mismatches += 1
                print("mismatch:", sg)
            kinds.update((q.kind, str(q.rhs)) for q in mine)
    print(f"{instances} instances, {mismatches} mismatches, {time.perf_counter() - t0:.1f}s")
    for (kind, rhs), k in sorted(kinds.items()):
        print(f"  {kind:6s} rhs {rhs}: {k}")


if __name__ == "__main__":
    main()
