#!/usr/bin/env python3
"""Cross-validate the expansion methods against each other, with timings.

Runs the divided-difference recursion, the operator formula, and the tableau
expansion over all of S_n, and the determinant-rank character up to the
requested size.  Any disagreement is printed and the run exits nonzero.

Example:
    python scripts/method_agreement.py --max-n 6 --weyl-max-n 5
"""

import argparse
import sys
import time

from zeroone.orthodontia import schubert_orthodontic
from zeroone.perms import rothe_diagram
from zeroone.poly import schubert_all
from zeroone.tableaux import schubert_from_tableaux
from zeroone.weyl import dual_character


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--weyl-max-n", type=int, default=5)
    args = parser.parse_args()

    failures = 0
    for n in range(1, args.max_n + 1):
        with_weyl = n <= args.weyl_max_n
        times = {"classic": 0.0, "orthodontia": 0.0, "tableaux": 0.0, "weyl": 0.0}
        t0 = time.perf_counter()
        table = dict(schubert_all(n))
        times["classic"] = time.perf_counter() - t0
        for w, f in table.items():
            t0 = time.perf_counter()
            g = schubert_orthodontic(w)
            times["orthodontia"] += time.perf_counter() - t0
            if g != f:
                failures += 1
                print(f"orthodontia mismatch at {w}")
            t0 = time.perf_counter()
            g = schubert_from_tableaux(w)
            times["tableaux"] += time.perf_counter() - t0
            if g != f:
                failures += 1
                print(f"tableaux mismatch at {w}")
            if with_weyl:
                t0 = time.perf_counter()
                g = dual_character(rothe_diagram(w))
                times["weyl"] += time.perf_counter() - t0
                if g != f:
                    failures += 1
                    print(f"weyl mismatch at {w}")
        report = "  ".join(f"{k}={v:.2f}s" for k, v in times.items()
                           if k != "weyl" or with_weyl)
        print(f"n={n}: {len(table)} permutations agree  ({report})")
    if failures:
        print(f"{failures} disagreements")
        sys.exit(1)


if __name__ == "__main__":
    main()
