"""Tally the omega = 4 branches of the (P3uP2, diamond)-free colourer over a corpus.

Prints, per branch, how often it fired, the largest number of colours it
used, and one small graph that reaches it.
"""

import argparse
from itertools import permutations

from chromabound.colouring import colour_p3p2_diamond
from chromabound.harness import SweepConfig, generate_class_instances
from chromabound.io import encode_edgelist
from chromabound.partition import clique_number, maximum_cliques
from chromabound.recognition import GraphClass


def corpus(samples, seed):
    c = GraphClass.P3P2_DIAMOND_FREE
    yield from generate_class_instances(SweepConfig(c, 4, 8))
    yield from generate_class_instances(SweepConfig(c, 5, 14, "random_sample", samples, seed))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=400)
    ap.add_argument("--seed", type=int, default=2)
    args = ap.parse_args()

    stats = {}
    for g in corpus(args.samples, args.seed):
        if clique_number(g) != 4:
            continue
        for q in maximum_cliques(g):
            for order in permutations(q):
                col, trace = colour_p3p2_diamond(g, order)
                case = trace.split("; ")[1].split("=", 1)[1]
                hits, most, example = stats.get(case, (0, 0, None))
                if example is None or g.n < example[0]:
                    example = (g.n, encode_edgelist(g), list(order))
                stats[case] = (hits + 1, max(most, col.colours_used), example)

    print(f"{'branch':<14} {'hits':>6} {'max colours':>12}  smallest example")
    for case in sorted(stats):
        hits, most, (n, enc, order) = stats[case]
        print(f"{case:<14} {hits:>6} {most:>12}  {enc}  clique order {order}")


if __name__ == "__main__":
    main()
