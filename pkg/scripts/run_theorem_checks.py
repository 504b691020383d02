#!/usr/bin/env python3
"""Run the brute-force theorem checks over all labeled cographs up to a size.

Equivalent to `cograph-hc check` but prints per-theorem notes and the first
few counterexamples, which the CLI keeps out of its machine-readable output.
"""

import argparse
import sys
import time

from cograph_hc import exhaustive_cographs
from cograph_hc import oracle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--theorems", default=None,
                        help="comma-separated subset of "
                             + ",".join(oracle.THEOREM_IDS))
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--show-counterexamples", type=int, default=3)
    args = parser.parse_args()

    if args.max_n > 6:
        print("size-guard: --max-n above 6 is not supported", file=sys.stderr)
        return 2
    theorems = args.theorems.split(",") if args.theorems else None

    corpus = []
    for n in range(1, args.max_n + 1):
        corpus.extend(exhaustive_cographs(n))
    print(f"corpus: {len(corpus)} labeled cographs, n <= {args.max_n}")

    start = time.perf_counter()
    reports = oracle.check_theorems(corpus, theorems, seed=args.seed)
    elapsed = time.perf_counter() - start

    failed = False
    for rep in reports:
        print(rep.render())
        for note in rep.notes[:5]:
            print(f"  note: {note}")
        if len(rep.notes) > 5:
            print(f"  ... {len(rep.notes) - 5} more notes")
        for ce in rep.counterexamples[:args.show_counterexamples]:
            print(f"  counterexample: {ce}")
        failed = failed or not rep.passed
    print(f"elapsed: {elapsed:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
