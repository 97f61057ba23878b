"""Densest T_r(rt)-free spanning subgraphs of T_r(rn) against t_r(rn) - n^2/2."""
import argparse

from turanlab.errors import BudgetExceeded
from turanlab.search import multipartite_free_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=12)
    ap.add_argument("--max-nodes", type=int, default=200_000)
    args = ap.parse_args()
    print("n t r max_edges host_edges bound holds nodes")
    for r in (2, 3):
        for t in (1, 2):
            for n in range(t, args.limit // r + 1):
                try:
                    res = multipartite_free_scan(n, t, r, limit=args.limit, max_nodes=args.max_nodes)
                except BudgetExceeded:
                    print(n, t, r, "budget exceeded")
                    continue
                print(res.n, res.t, res.r, res.max_edges, res.host_edges, res.bound, res.bound_holds, res.nodes)


if __name__ == "__main__":
    main()
