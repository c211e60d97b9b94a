#!/usr/bin/env python3
"""Run every construction script in a directory and write the SVG drawings
they emit into an output directory."""
import argparse
import sys
from pathlib import Path

from geomkit.dsl import ParseError, run_text

ROOT = Path(__file__).resolve().parents[1]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("src", nargs="?", default=str(ROOT / "tests" / "fixtures"))
    ap.add_argument("--out", default="figures")
    ap.add_argument("--precision", type=int, default=20)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    status = 0
    for path in sorted(Path(args.src).glob("*.geo")):
        try:
            rep = run_text(path.read_text(encoding="utf-8"), args.precision)
        except ParseError as exc:
            print(f"{path}:{exc}", file=sys.stderr)
            status = 2
            continue
        written = rep.write_emits(out)
        c = rep.counts
        print(f"{path.name:20} {c['pass']:3} pass {c['fail']:2} fail {c['error']:2} error"
              + "".join(f"  -> {w}" for w in written))
        if not rep.passed:
            status = max(status, 1)
    return status


if __name__ == "__main__":
    sys.exit(main())
