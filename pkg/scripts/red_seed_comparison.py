"""Compare the two seed rules for far-apart faces dual to red vertices.

For each instance with two 4-faces at face distance >= 5, every chosen-edge
combination is run twice: with the star placed at the neighbour across the
chosen edge (literal rule) and at the neighbour opposite it (used rule).
Counts are grouped by the colour of the dual vertex of each face.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from collections import Counter

from barnette4.e4_membership import tricolouring
from barnette4.experiments import far_face_corpus
from barnette4.oracle import verify_theorem12
from barnette4.planar_core import dual_graph


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--max-ops", type=int, default=40)
    args = ap.parse_args()

    runs: Counter = Counter()
    literal_fail: Counter = Counter()
    used_fail: Counter = Counter()
    for label, p, (f, h) in far_face_corpus(args.count, max_ops=args.max_ops):
        col = tricolouring(dual_graph(p)[0])
        key = "".join(sorted(col.of(x + 1) for x in (f, h)))
        for e1, e2 in itertools.product(p.faces.walks[f], p.faces.walks[h]):
            runs[key] += 1
            used_fail[key] += not verify_theorem12(p, [f, h], {f: e1, h: e2}).passed
            literal_fail[key] += not verify_theorem12(
                p, [f, h], {f: e1, h: e2}, literal_red=True).passed
    print("face_colours runs used_rule_failures literal_rule_failures")
    for key in sorted(runs):
        print(f"{key} {runs[key]} {used_fail[key]} {literal_fail[key]}")
    return 1 if sum(used_fail.values()) else 0


if __name__ == "__main__":
    sys.exit(main())
