"""Lower-bound construction next to exact values where the search is in budget.

Rows where exact_value differs from target are small-n data points, not
failures: the construction is only claimed optimal for large n.
"""
import argparse
import csv
import sys

from turanlab.cli import parse_components
from turanlab.constructions import smallest_valid_n
from turanlab.search import verify_theorem_grid

CASES = [(1, 2, "K2"), (2, 2, "K2+K2"), (3, 2, "K2+K2+K2"), (1, 3, "K3"), (2, 3, "K3+K3"),
         (2, 3, "K3+C5"), (1, 4, "K4")]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--span", type=int, default=4, help="n values per case, from the smallest valid n")
    ap.add_argument("--exact-max-n", type=int, default=8)
    args = ap.parse_args()
    writer = None
    for k, r, comps in CASES:
        start = smallest_valid_n(k, r)
        rows = verify_theorem_grid(k, r, parse_components(comps), range(start, start + args.span),
                                   exact_limit=args.exact_max_n, describe=comps + "+v")
        for v in rows:
            d = v.to_dict()
            if writer is None:
                writer = csv.DictWriter(sys.stdout, fieldnames=list(d))
                writer.writeheader()
            writer.writerow(d)
            sys.stdout.flush()


if __name__ == "__main__":
    main()
