"""Oracle report on the 15-vertex nonhamiltonian triangulation and its
iterated substitutions.

    python scripts/dillencourt_report.py --levels 2
"""

import argparse
from dataclasses import dataclass

from k4trees import generators, oracles


@dataclass
class ReportConfig:
    levels: int = 2


def run(cfg: ReportConfig):
    lg = generators.dillencourt_t()
    T = lg.graph
    corners = [lg[k] for k in "ABC"]
    print(f"T: n={T.n} m={T.m} (3n-6={3 * T.n - 6})")
    print(f"  toughness: {oracles.toughness(T)}")
    print(f"  hamiltonian cycle: {oracles.has_hamiltonian_cycle(T)}")
    print(f"  hamiltonian path: {oracles.hamiltonian_path(T)}")
    print(f"  hamiltonian path ending in A,B,C: {oracles.hamiltonian_path(T, corners)}")
    simp = [v for v in range(T.n) if oracles.is_simplicial(T, v)]
    print(f"  simplicial vertices: {simp}")
    for level in range(2, cfg.levels + 1):
        G = generators.dillencourt_gn(level)
        print(f"G_{level}: n={G.graph.n} m={G.graph.m} simplicial={len(G.simplicial)}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--levels", type=int, default=ReportConfig.levels)
    run(ReportConfig(levels=p.parse_args().levels))


if __name__ == "__main__":
    main()
