#!/usr/bin/env python3
"""Sweep S_n for a range of n and tabulate the zero-one counts.

Example:
    python scripts/survey_zero_one.py --max-n 7
    python scripts/survey_zero_one.py --max-n 7 --methods all
"""

import argparse
import time

from zeroone.classify import survey


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--methods", choices=["fast", "all"], default="fast")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--limit", type=int, default=None)
    args = parser.parse_args()

    print(f"{'n':>3} {'total':>9} {'zero-one':>9} {'disagree':>9} {'seconds':>8}")
    for n in range(args.min_n, args.max_n + 1):
        t0 = time.perf_counter()
        summary = survey(n, methods=args.methods, workers=args.workers, limit=args.limit)
        dt = time.perf_counter() - t0
        print(f"{n:>3} {summary.total:>9} {summary.zero_one:>9} "
              f"{summary.disagreements:>9} {dt:>8.2f}")


if __name__ == "__main__":
    main()
