"""Run every property suite for several seeds and write a JSON summary.

    python scripts/run_suites.py --seeds 1 2 3 --cases 100 --out results/suites.json
"""

import argparse
import json
import pathlib

from plgroup.harness import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, nargs="+", default=[42])
    ap.add_argument("--cases", type=int, default=100)
    ap.add_argument("--out", default="results/suites.json")
    args = ap.parse_args()

    rows = []
    for seed in args.seeds:
        for name in SUITES:
            r = run_suite(name, seed, args.cases)
            rows.append({"suite": name, "seed": seed, "cases_run": r.cases_run, "failures": r.failures,
                         "elapsed": round(r.elapsed, 3), "counterexample": r.counterexample})
            print(f"seed {seed:>4}  {name:<14} {r.cases_run:>6} cases  {r.failures} failures  {r.elapsed:6.2f}s")
    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(rows, indent=2))
    total = sum(r["failures"] for r in rows)
    print(f"total failures {total}; summary written to {out}")
    return 1 if total else 0


if __name__ == "__main__":
    raise SystemExit(main())
