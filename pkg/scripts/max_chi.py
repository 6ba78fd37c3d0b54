"""Largest chromatic number observed per omega, against the proved bound.

Useful for eyeballing how tight each bound is on small graphs; no
conclusion is drawn about tightness.
"""

import argparse

from chromabound.colouring import bound_for_class, chromatic_number_exact
from chromabound.harness import SweepConfig, generate_class_instances
from chromabound.io import encode_edgelist
from chromabound.partition import clique_number
from chromabound.recognition import GraphClass


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--classes", nargs="*", default=[c.flag for c in GraphClass])
    args = ap.parse_args()

    for flag in args.classes:
        c = GraphClass.from_flag(flag)
        best = {}
        for g in generate_class_instances(SweepConfig(c, 1, args.n_max)):
            w = clique_number(g)
            chi = chromatic_number_exact(g)[0]
            if w not in best or chi > best[w][0]:
                best[w] = (chi, encode_edgelist(g))
        print(f"{flag} (n <= {args.n_max})")
        for w in sorted(best):
            chi, enc = best[w]
            print(f"  omega={w}  max chi={chi}  bound={bound_for_class(c, w)}  e.g. {enc}")


if __name__ == "__main__":
    main()
