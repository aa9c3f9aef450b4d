#!/usr/bin/env python3
"""Run every identity verifier at its default order and print one line each.

Usage:
    python scripts/verify_all.py [--quick]

--quick drops the truncation orders to smoke-test levels (a second or two);
the default orders match the acceptance suite.  Exits nonzero if anything
fails.
"""

import argparse
import sys
import time

from qdissect.identities import (
    verify_2_dissection,
    verify_3_dissection,
    verify_5_dissection,
    verify_component_4_vanishing,
    verify_congruence,
    verify_crank_gf,
    verify_equidistribution,
    verify_rank_gf,
)

FULL = {"crank-gf": 40, "rank-gf": 30, "dissection-2": 80, "dissection-3": 81,
        "dissection-5": 100, "component-4": 100}
QUICK = {"crank-gf": 12, "rank-gf": 10, "dissection-2": 20, "dissection-3": 21,
         "dissection-5": 20, "component-4": 20}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()
    orders = QUICK if args.quick else FULL

    runs = [
        lambda: verify_crank_gf(orders["crank-gf"]),
        lambda: verify_rank_gf(orders["rank-gf"]),
        lambda: verify_congruence(5, 4, 20),
        lambda: verify_congruence(7, 5, 15),
        lambda: verify_congruence(11, 6, 10),
        lambda: verify_equidistribution("crank", 5, 4, 8),
        lambda: verify_equidistribution("crank", 7, 5, 5),
        lambda: verify_equidistribution("crank", 11, 6, 3),
        lambda: verify_equidistribution("rank", 5, 4, 8),
        lambda: verify_equidistribution("rank", 7, 5, 5),
        lambda: verify_2_dissection(orders["dissection-2"]),
        lambda: verify_3_dissection(orders["dissection-3"]),
        *[lambda r=r: verify_5_dissection(orders["dissection-5"], root_power=r)
          for r in (1, 2, 3, 4)],
        lambda: verify_component_4_vanishing(orders["component-4"]),
    ]

    started = time.perf_counter()
    failures = 0
    for run in runs:
        report = run()
        mark = "ok  " if report.passed else "FAIL"
        line = f"[{mark}] {report.identity:<24} order {report.order:<4} {report.elapsed:7.2f}s"
        if report.failure_witness is not None:
            w = report.failure_witness
            line += f"  first mismatch at q^{w.power}: expected {w.expected}, got {w.actual}"
            failures += 1
        print(line)
    print(f"total {time.perf_counter() - started:.1f}s, {failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
