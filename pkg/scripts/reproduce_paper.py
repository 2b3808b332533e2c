"""Recompute the worked examples and print one line per item.

    python3 scripts/reproduce_paper.py [--json out.json]
"""

import argparse
import json
import sys
import time

from lcmdepth.experiments import reproduce_paper_examples


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="write the items here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    items = reproduce_paper_examples()
    for it in items:
        print(f"{'ok  ' if it.ok else 'FAIL'} {it.name}: expected {it.expected}, got {it.actual}")
    bad = sum(not it.ok for it in items)
    print(f"{len(items) - bad}/{len(items)} match in {time.perf_counter() - t0:.2f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([vars(it) | {"ok": it.ok} for it in items], fh, indent=2, default=str)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
