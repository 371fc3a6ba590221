"""Node counts and wall time of both existence searches over the corpus and small enumerations."""
import argparse
import time

from latnorm import corpus
from latnorm.search import (SearchConfig, enumerate_lattices, exists_join_distributive_pseudo_tnorm,
                            exists_left_continuous_tnorm)


def measure(L, cfg):
    row = [L.name, L.n]
    for fn in (exists_join_distributive_pseudo_tnorm, exists_left_continuous_tnorm):
        t = time.perf_counter()
        out = fn(L, cfg)
        row += [out.status, out.nodes_explored, time.perf_counter() - t]
    return row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--enumerated", type=int, default=0, metavar="N",
                    help="also sweep every lattice with at most N elements")
    ap.add_argument("--node-budget", type=int, default=SearchConfig.node_budget)
    args = ap.parse_args()
    cfg = SearchConfig(node_budget=args.node_budget)

    lattices = [corpus.get(nm) for nm in corpus.names()]
    lattices += [L for n in range(2, args.enumerated + 1) for L in enumerate_lattices(n)]
    print(f"{'lattice':12} {'n':>3}  {'pseudo':15} {'nodes':>7} {'sec':>7}  {'tnorm':15} {'nodes':>7} {'sec':>7}")
    worst = 0
    for L in lattices:
        name, n, ps, pn, pt, ts, tn, tt = measure(L, cfg)
        worst = max(worst, pn, tn)
        print(f"{name:12} {n:3}  {ps:15} {pn:7} {pt:7.3f}  {ts:15} {tn:7} {tt:7.3f}")
    print(f"\nlargest node count: {worst}")


if __name__ == "__main__":
    main()
