"""Seeded random check that critical edges stay critical through the centre
of a one-component suspension, beyond the exhaustive n <= 7 range."""
import argparse
import json

from turanlab.certificates import check_suspension_lift, critical_edges
from turanlab.graph import to_graph6
from turanlab.sampling import random_graph, rng_for


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--min-n", type=int, default=8)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    rng = rng_for(args.seed)
    lifts, bad = 0, []
    for _ in range(args.count):
        n = int(rng.integers(args.min_n, args.max_n + 1))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.8)))
        for e in critical_edges(g):
            lifts += 1
            if not check_suspension_lift(g, e):
                bad.append([to_graph6(g), list(e)])
    print(json.dumps({"seed": args.seed, "samples": args.count, "lifts": lifts, "violations": bad}))


if __name__ == "__main__":
    main()
