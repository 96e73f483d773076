"""Exhaustive sweep over connected K4-minor-free graphs on few vertices.

For every graph and budget (uniform k plus random per-vertex budgets) this
compares the brute-force condition, the flow outcome, and the built trees.

    python scripts/sweep_small_graphs.py --max-n 7 --random-budgets 50
"""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from k4trees import oracles, tree_builder
from k4trees.decomposition import is_k4_minor_free
from k4trees.graph_core import InvariantViolation
from k4trees.n2c_weights import ViolationCertificate, WeightAssignment, assign_weights


@dataclass
class SweepConfig:
    max_n: int = 7
    uniform: tuple[int, ...] = (2, 3)
    random_budgets: int = 50
    budget_values: tuple[int, ...] = (2, 3, 4)
    seed: int = 0
    show: int = 10


def budgets_for(G, cfg, rng):
    out = {(k,) * G.n for k in cfg.uniform}
    for _ in range(cfg.random_budgets):
        out.add(tuple(rng.choice(cfg.budget_values) for _ in range(G.n)))
    return sorted(out)


def run(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    tally = Counter()
    gaps = []
    start = time.time()
    for n in range(1, cfg.max_n + 1):
        for G in oracles.enumerate_connected_graphs(n):
            if not is_k4_minor_free(G):
                continue
            tally["graphs"] += 1
            for f in budgets_for(G, cfg, rng):
                tally["pairs"] += 1
                ok = oracles.check_condition_bruteforce(G, f) is None
                tally["condition ok"] += ok
                try:
                    out = assign_weights(G, f)
                except InvariantViolation:
                    tally["no outcome"] += 1
                    gaps.append((G.edges(), f, ok))
                    continue
                if isinstance(out, ViolationCertificate):
                    tally["certificates"] += 1
                    continue
                assert isinstance(out, WeightAssignment)
                tally["weights"] += 1
                for x in range(G.n):
                    T = tree_builder.build_degree_bounded_tree(G, f, x)
                    tally["builds"] += 1
                    if tree_builder.verify_tree(G, f, T, T.marked | {x}, T.special):
                        tally["bad trees"] += 1
    print(f"sweep up to {cfg.max_n} vertices in {time.time() - start:.1f}s")
    for key in ("graphs", "pairs", "condition ok", "weights", "certificates",
                "no outcome", "builds", "bad trees"):
        print(f"  {key:>14}: {tally[key]}")
    for edges, f, ok in gaps[: cfg.show]:
        print(f"  no outcome: condition {'holds' if ok else 'fails'} f={f} edges={edges}")
    return tally, gaps


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    p.add_argument("--random-budgets", type=int, default=SweepConfig.random_budgets)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = p.parse_args()
    run(SweepConfig(max_n=a.max_n, random_budgets=a.random_budgets, seed=a.seed))


if __name__ == "__main__":
    main()
