"""Named graph families and seeded random K4-minor-free graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .graph_core import Graph, InputError, edge_key
from .n2c_weights import Budget, make_budget


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: Mapping[str, int] = field(default_factory=dict)
    simplicial: tuple[int, ...] = ()

    def __post_init__(self):
        if len(set(self.labels.values())) != len(self.labels):
            raise InputError("labels must name distinct vertices")

    def __getitem__(self, name: str) -> int:
        return self.labels[name]


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def theta(paths: int = 3, length: int = 2) -> Graph:
    """Vertices 0 and 1 joined by ``paths`` internally disjoint paths of
    ``length`` edges each (at most one path may have length 1)."""
    edges = []
    nxt = 2
    for _ in range(paths):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def fan(n: int) -> Graph:
    """Path 1..n-1 plus a hub 0 adjacent to all of it."""
    if n < 2:
        raise InputError("a fan needs at least 2 vertices")
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return Graph.from_edges(n, edges)


def maximal_outerplanar(n: int, seed: int = 0) -> Graph:
    """Random triangulation of the polygon 0..n-1."""
    if n < 3:
        raise InputError("need at least 3 vertices")
    rng = random.Random(seed)
    edges = {edge_key(i, (i + 1) % n) for i in range(n)}
    stack = [list(range(n))]
    while stack:
        poly = stack.pop()
        if len(poly) < 4:
            continue
        i, j = sorted(rng.sample(range(len(poly)), 2))
        if j - i == 1 or (i == 0 and j == len(poly) - 1):
            j = (i + 2) % len(poly)
            i, j = min(i, j), max(i, j)
        edges.add(edge_key(poly[i], poly[j]))
        stack.append(poly[i : j + 1])
        stack.append(poly[j:] + poly[: i + 1])
    return Graph.from_edges(n, edges)


def random_series_parallel(n: int, seed: int = 0, pendant_rate: float = 0.15) -> Graph:
    """Connected K4-minor-free graph on n vertices, deterministic per seed.

    Grows from K2 by three moves, each adding one vertex w: subdivide an edge
    uv (series), add w adjacent to both ends of an edge uv (parallel with a
    2-path), or hang w off an existing vertex (new cut block). Every move keeps
    each block series-parallel.
    """
    if n < 2:
        raise InputError("need at least 2 vertices")
    rng = random.Random(seed)
    edges = [(0, 1)]
    for w in range(2, n):
        r = rng.random()
        if r < pendant_rate:
            edges.append((rng.randrange(w), w))
            continue
        i = rng.randrange(len(edges))
        u, v = edges[i]
        if r < pendant_rate + (1 - pendant_rate) / 2:
            edges[i] = edges[-1]
            edges.pop()
        edges += [(u, w), (v, w)]
    return Graph.from_edges(n, edges)


def triangle_pendants(fx: int, fy: int, fz: int) -> tuple[LabeledGraph, Budget]:
    """Triangle xyz with f(v) - 1 pendant leaves at each corner; leaves get 2."""
    if min(fx, fy, fz) < 2:
        raise InputError("budgets must be at least 2")
    edges = [(0, 1), (1, 2), (0, 2)]
    f = [fx, fy, fz]
    nxt = 3
    for v, fv in enumerate((fx, fy, fz)):
        for _ in range(fv - 1):
            edges.append((v, nxt))
            f.append(2)
            nxt += 1
    G = Graph.from_edges(nxt, edges)
    return LabeledGraph(G, {"x": 0, "y": 1, "z": 2}), tuple(f)


def pendant_augment(
    G: Graph, f: Union[int, Mapping[int, int], Sequence[int]]
) -> tuple[Graph, Budget]:
    """Attach f(v) - 2 pendant leaves at every v; leaves get budget 2."""
    f = make_budget(G, f)
    edges = G.edges()
    out = list(f)
    nxt = G.n
    for v in range(G.n):
        for _ in range(f[v] - 2):
            edges.append((v, nxt))
            out.append(2)
            nxt += 1
    return Graph.from_edges(nxt, edges), tuple(out)


# Transcribed from the drawing of the 1-tough nonhamiltonian maximal planar
# graph: A, B, C outer corners; 3..7 inner grey vertices; 8..14 simplicial.
_T_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 7), (0, 9), (1, 2), (1, 6), (1, 7),
    (1, 8), (2, 4), (2, 6), (2, 14), (3, 4), (3, 5), (3, 7), (3, 9), (3, 10),
    (3, 11), (4, 5), (4, 6), (4, 11), (4, 13), (4, 14), (5, 6), (5, 7),
    (5, 10), (5, 11), (5, 12), (5, 13), (6, 7), (6, 8), (6, 12), (6, 13),
    (6, 14), (7, 8), (7, 9), (7, 10), (7, 12),
]
_T_SIMPLICIAL = (8, 9, 10, 11, 12, 13, 14)


def dillencourt_t() -> LabeledGraph:
    G = Graph.from_edges(15, _T_EDGES)
    return LabeledGraph(G, {"A": 0, "B": 1, "C": 2}, _T_SIMPLICIAL)


def _simplicial(G: Graph) -> list[int]:
    return [
        v for v in range(G.n)
        if all(G.has_edge(a, b) for i, a in enumerate(G.adj[v]) for b in G.adj[v][i + 1:])
    ]


def dillencourt_gn(n: int) -> LabeledGraph:
    """G_1 = T; G_n replaces each simplicial vertex u of G_{n-1}, with
    neighbours x < y < z, by a copy of T joined by Ax, Ay, By, Bz, Cz, Cx."""
    if n < 1:
        raise InputError("n must be at least 1")
    T = dillencourt_t()
    G = T.graph
    labels = dict(T.labels)
    for _ in range(n - 1):
        simp = set(_simplicial(G))
        keep = [v for v in range(G.n) if v not in simp]
        new_id = {v: i for i, v in enumerate(keep)}
        edges = [(new_id[a], new_id[b]) for a, b in G.edges() if a in new_id and b in new_id]
        nxt = len(keep)
        for u in sorted(simp):
            x, y, z = (new_id[w] for w in G.adj[u])
            off = nxt
            edges += [(a + off, b + off) for a, b in _T_EDGES]
            A, B, C = off + T["A"], off + T["B"], off + T["C"]
            edges += [(A, x), (A, y), (B, y), (B, z), (C, z), (C, x)]
            nxt += T.graph.n
        G = Graph.from_edges(nxt, edges)
        labels = {k: new_id[v] for k, v in labels.items() if v in new_id}
    return LabeledGraph(G, labels, tuple(_simplicial(G)))
