"""Bound sweep and Stanley-inequality sweep over several seeds and sizes.

Writes one JSON report per (kind, n, seed) into --out and prints a summary
table. Example:

    python3 scripts/run_sweep.py --seeds 0 1 2 --ns 3 4 --count 200 --out runs/
"""

import argparse
import os
import sys
import time

from lcmdepth.experiments import ExperimentConfig, conjecture_sweep, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--ns", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-exponent", type=int, default=2)
    ap.add_argument("--max-generators", type=int, default=4)
    ap.add_argument("--squarefree", action="store_true")
    ap.add_argument("--complex-count", type=int, default=200)
    ap.add_argument("--time-budget", type=float)
    ap.add_argument("--out", default="sweep_reports")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    any_fail = False
    print(f"{'kind':11s} {'n':>2s} {'seed':>5s} {'pass':>5s} {'fail':>5s} {'skip':>5s} {'filt':>5s} {'checks':>7s} {'secs':>6s}")
    for seed in args.seeds:
        for n in args.ns:
            cfg = ExperimentConfig(
                seed=seed,
                n=n,
                max_exponent=args.max_exponent,
                max_generators=args.max_generators,
                squarefree=args.squarefree,
                count=args.count,
                time_budget=args.time_budget,
                complex_vertices=min(n + 1, 5),
                complex_count=args.complex_count,
            )
            for kind, run in (("bounds", sweep), ("conjecture", conjecture_sweep)):
                t0 = time.perf_counter()
                rep = run(cfg)
                dt = time.perf_counter() - t0
                with open(os.path.join(args.out, f"{kind}_n{n}_seed{seed}.json"), "w") as fh:
                    fh.write(rep.to_json())
                s = rep.summary()
                any_fail |= not rep.ok
                print(
                    f"{kind:11s} {n:2d} {seed:5d} {s['pass']:5d} {s['fail']:5d} {s['skipped']:5d} "
                    f"{s['filtered']:5d} {s['checks']:7d} {dt:6.2f}"
                )
    return 1 if any_fail else 0


if __name__ == "__main__":
    sys.exit(main())
