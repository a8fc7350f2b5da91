"""Lower bound vs first-choice count for fixed k (default 4), as CSV on stdout.

    python scripts/figure1.py [--k 4] [--max-q 5] [--exact-up-to 4]

``--exact-up-to Q`` adds an ``exact`` column solved by branch and bound for
q <= Q (blank above). Pipe the output into any plotting tool.
"""

import argparse
import sys

from sperner_lattice.bounds import emit_figure1_csv
from sperner_lattice.search import branch_bound_min


def main(argv=None):
    p = argparse.ArgumentParser()
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--max-q", type=int, default=5)
    p.add_argument("--exact-up-to", type=int, default=0)
    args = p.parse_args(argv)
    qs = range(1, args.max_q + 1)
    exact = None
    if args.exact_up_to:
        exact = {q: branch_bound_min(args.k, q).m for q in qs if q <= args.exact_up_to}
    sys.stdout.write(emit_figure1_csv(args.k, qs, exact))
    return 0


if __name__ == "__main__":
    sys.exit(main())
