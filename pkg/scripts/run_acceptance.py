"""Run every acceptance check and print one PASS/FAIL line each.

Exit status is 0 only if all checks pass.
"""

from __future__ import annotations

import argparse
import sys
import time

from barnette4 import experiments as ex


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=ex.FUZZ_SIZE, help="fuzz corpus size")
    args = ap.parse_args()

    corpus = ex.fuzz_corpus(args.size)
    t0 = time.perf_counter()
    records = ex.run_fuzz(corpus)
    fuzz_seconds = time.perf_counter() - t0
    results = [
        ex.check_walkthrough(),
        ex.check_fuzz(records, fuzz_seconds),
        ex.check_oracle_equivalence(ex.small_closure() + [i for i in corpus if i.g.n <= 12]),
        ex.check_closed_pair_extension(corpus),
        ex.check_far_faces(ex.far_face_corpus()),
        ex.check_distinctness(records),
    ]
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
