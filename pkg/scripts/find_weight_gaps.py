"""Search random series-parallel graphs for budgets where the component
condition holds but no weight assignment exists.

    python scripts/find_weight_gaps.py --trials 3000 --max-n 16
"""

import argparse
from dataclasses import dataclass

from k4trees import generators, oracles
from k4trees.graph_core import InvariantViolation, component_count
from k4trees.n2c_weights import assign_weights, n2c_table


@dataclass
class GapConfig:
    trials: int = 3000
    min_n: int = 4
    max_n: int = 16
    budgets: tuple[int, ...] = (2, 3, 4, 5)


def run(cfg: GapConfig):
    span = cfg.max_n - cfg.min_n + 1
    found = []
    for seed in range(cfg.trials):
        n = cfg.min_n + seed % span
        G = generators.random_series_parallel(n, seed)
        for k in cfg.budgets:
            try:
                assign_weights(G, k)
            except InvariantViolation:
                holds = oracles.check_condition_bruteforce(G, k) is None
                found.append((seed, n, k, holds))
                slack = {v: k - component_count(G, (v,)) - 1 for v in range(n)}
                print(f"seed={seed} n={n} k={k} condition={'holds' if holds else 'fails'}"
                      f" n2cs={n2c_table(G)} slack={slack}")
    print(f"{len(found)} gaps in {cfg.trials * len(cfg.budgets)} trials")
    return found


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=GapConfig.trials)
    p.add_argument("--max-n", type=int, default=GapConfig.max_n)
    a = p.parse_args()
    run(GapConfig(trials=a.trials, max_n=a.max_n))


if __name__ == "__main__":
    main()
