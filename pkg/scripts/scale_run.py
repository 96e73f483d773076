"""Build trees on larger random series-parallel graphs and time each stage.

    python scripts/scale_run.py --graphs 200 --max-n 200
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from k4trees import generators, tree_builder
from k4trees.graph_core import InvariantViolation, component_count
from k4trees.n2c_weights import WeightAssignment, assign_weights, n2c_table


@dataclass
class ScaleConfig:
    graphs: int = 200
    min_n: int = 10
    max_n: int = 200
    pendant_rate: float = 0.15
    seed: int = 0


def generous_budget(G):
    """f(v) = c(G - v) + 1 + sum of c(G,F) - 2 over N2Cs F at v."""
    extra = [0] * G.n
    for (u, v), c in n2c_table(G).items():
        extra[u] += c - 2
        extra[v] += c - 2
    return tuple(component_count(G, (v,)) + 1 + extra[v] for v in range(G.n))


def run(cfg: ScaleConfig):
    rng = random.Random(cfg.seed)
    rows = []
    for i in range(cfg.graphs):
        n = rng.randint(cfg.min_n, cfg.max_n)
        G = generators.random_series_parallel(n, seed=i, pendant_rate=cfg.pendant_rate)
        mode = i % 3
        if mode == 0:
            f = (rng.choice((2, 3, 4)),) * n
        elif mode == 1:
            f = tuple(rng.randint(2, 5) for _ in range(n))
        else:
            f = generous_budget(G)
        x = rng.randrange(n)
        t0 = time.perf_counter()
        try:
            out = assign_weights(G, f)
        except InvariantViolation:
            rows.append((n, "no outcome", time.perf_counter() - t0))
            continue
        if not isinstance(out, WeightAssignment):
            rows.append((n, "certificate", time.perf_counter() - t0))
            continue
        T = tree_builder.build_degree_bounded_tree(G, f, x)
        bad = tree_builder.verify_tree(G, f, T, T.marked | {x}, T.special)
        rows.append((n, "bad tree" if bad else "tree", time.perf_counter() - t0))
    for kind in ("tree", "certificate", "no outcome", "bad tree"):
        times = [t for _, k, t in rows if k == kind]
        if times:
            print(f"{kind:>12}: {len(times):4d}  median {statistics.median(times) * 1e3:7.1f} ms"
                  f"  max {max(times) * 1e3:7.1f} ms")
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--graphs", type=int, default=ScaleConfig.graphs)
    p.add_argument("--max-n", type=int, default=ScaleConfig.max_n)
    p.add_argument("--seed", type=int, default=ScaleConfig.seed)
    a = p.parse_args()
    run(ScaleConfig(graphs=a.graphs, max_n=a.max_n, seed=a.seed))


if __name__ == "__main__":
    main()
