"""Run verification campaigns and print one summary line per report.

    python3 scripts/run_campaigns.py                 # all campaigns, seed 0
    python3 scripts/run_campaigns.py --seed 3 --json reports.jsonl
    python3 scripts/run_campaigns.py --campaign kronecker6-rigid --bound 20
"""

import argparse
import sys

from rigidlab.theoremlab import ALL_CAMPAIGNS, RunConfig, all_passed, run_all


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--campaign", action="append", choices=ALL_CAMPAIGNS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=40)
    p.add_argument("--window", type=int, default=6)
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--json", help="also write the full reports to this JSON-lines file")
    args = p.parse_args()
    config = RunConfig(campaigns=tuple(args.campaign or ALL_CAMPAIGNS), seed=args.seed,
                       bound=args.bound, window=args.window, trials=args.trials)
    reports = run_all(config)
    for r in reports:
        print(f"{r.claim:20s} {r.status:5s} {len(r.checks):4d} checks "
              f"{len(r.counterexamples):3d} failing {r.ms / 1000:7.1f}s")
        for c in r.counterexamples:
            print(f"    {c['name']}: inputs={c['inputs']} expected={c['expected']} got={c['got']}")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write("".join(r.to_json() + "\n" for r in reports))
    return 0 if all_passed(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
