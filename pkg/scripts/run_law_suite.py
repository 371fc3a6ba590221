"""Run the structural equivalence checks on the corpus and on all small lattices."""
import argparse
import json
import sys
import time

from latnorm.search import SearchConfig, run_law_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7, help="largest enumerated lattice size")
    ap.add_argument("--json", metavar="FILE", help="dump both reports here")
    ap.add_argument("--node-budget", type=int, default=SearchConfig.node_budget)
    args = ap.parse_args()
    cfg = SearchConfig(node_budget=args.node_budget)

    reports = {}
    for scope in ("corpus", args.max_n):
        t = time.perf_counter()
        rep = run_law_suite(scope, cfg=cfg)
        reports[rep.scope] = rep.as_dict()
        print(f"{rep.scope:16} lattices={len(rep.rows):4} counterexamples={len(rep.counterexamples)} "
              f"converse={rep.converse_witnesses} budget={rep.budget_exceeded} "
              f"({time.perf_counter() - t:.1f}s)")
        for c in rep.counterexamples:
            print(f"  {c.check} on {c.lattice}: {c.detail}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=2)
    return 0 if all(r["ok"] for r in reports.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
