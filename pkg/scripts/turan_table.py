"""Exact ex(n, H) for a few small patterns, printed as CSV."""
import argparse
import csv
import sys

from turanlab.cli import parse_graph_arg
from turanlab.constructions import turan_edge_count
from turanlab.search import default_turan_limit, exact_turan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--patterns", nargs="+", default=["k3", "k4", "c4", "c5", "bowtie"])
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    out = csv.writer(sys.stdout)
    out.writerow(["pattern", "n", "ex", "t2(n)", "extremal_count", "nodes", "seconds"])
    for name in args.patterns:
        h = parse_graph_arg(name)
        for n in range(max(h.n, 2), min(args.n_max, default_turan_limit(h)) + 1):
            rep = exact_turan(n, h, workers=args.workers)
            out.writerow([name, n, rep.ex_value, turan_edge_count(n, 2), len(rep.extremal_codes),
                          rep.stats.nodes, f"{rep.stats.wall_time:.2f}"])
            sys.stdout.flush()


if __name__ == "__main__":
    main()
