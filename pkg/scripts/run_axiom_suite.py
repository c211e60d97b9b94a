#!/usr/bin/env python3
"""Run the property suite at the acceptance case counts and write a JSON report."""
import argparse
import json
import sys
import time

from geomkit.suite import run_axiom_suite

# group -> case count used for acceptance
COUNTS = {"order": 1000, "congruence": 500, "transforms": 300,
          "measure": 300, "similarity": 300, "vectors": 1000}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every case count")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="write the combined JSON report here")
    args = ap.parse_args()

    reports, ok = [], True
    for group, n in COUNTS.items():
        cases = max(1, int(n * args.scale))
        t0 = time.perf_counter()
        rep = run_axiom_suite(cases=cases, seed=args.seed, groups=[group], workers=args.workers)
        dt = time.perf_counter() - t0
        failing = [r.id for r in rep.results if not r.passed]
        ok &= rep.passed
        print(f"{group:11} {len(rep.results):3} properties x {cases:5} cases  "
              f"{dt:6.1f}s  {'ok' if rep.passed else 'FAIL ' + ', '.join(failing)}")
        reports.append(rep.to_json())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"schema": 1, "seed": args.seed, "groups": reports}, fh, indent=2)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
