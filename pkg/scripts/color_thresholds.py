"""Cells with at least j colours under the first-choice labeling, for growing q.

    python scripts/color_thresholds.py [--k 4] [--max-q 8]

Prints one row per q with the counts for j = 1..k next to q^(k-j), the growth
order suggested for the minimum number of cells with j colours.
"""

import argparse

from sperner_lattice.labeling import color_histogram, first_choice_labeling
from sperner_lattice.triangulation import triangulate


def main(argv=None):
    p = argparse.ArgumentParser()
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--max-q", type=int, default=8)
    args = p.parse_args(argv)
    k = args.k
    print("q," + ",".join(f"at_least_{j}" for j in range(1, k + 1)) + "," + ",".join(f"q^{k - j}" for j in range(1, k + 1)))
    for q in range(1, args.max_q + 1):
        hist = color_histogram(triangulate(k, q), first_choice_labeling(k, q))
        at_least = [sum(hist[i] for i in range(j, k + 1)) for j in range(1, k + 1)]
        print(f"{q}," + ",".join(map(str, at_least)) + "," + ",".join(str(q ** (k - j)) for j in range(1, k + 1)))


if __name__ == "__main__":
    main()
