"""Spanning trees with per-vertex degree bounds in K4-minor-free graphs.

The builder splits at a nontrivial 2-cut {x, y}: one bridge D goes into
G2 = D + xy, the rest into G1 = G - V(D - {x,y}) + xy. Weights on the N2Cs
tell how much of each budget the two sides receive. Without N2Cs every block
is outerplanar and a hamiltonian path per block suffices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .decomposition import (
    RootedBlockTree,
    _decompose,
    _outer_cycle,
    block_graph,
    block_parents,
    find_special_edge,
    is_k4_minor_free,
    rooted_block_tree,
)
from .graph_core import (
    Edge,
    Graph,
    InputError,
    InvariantViolation,
    c_pair,
    components,
    edge_key,
    induced_subgraph,
    is_connected,
)
from .n2c_weights import (
    Budget,
    ViolationCertificate,
    WeightAssignment,
    assign_weights,
    block_cut_counts,
    make_budget,
    n2c_table,
)

Weights = dict[tuple[Edge, int], int]


@dataclass(frozen=True)
class SpanningTree:
    """Edge set of a spanning tree, with the marked vertices and the
    (special edge, c value) pairs it was built to honour."""

    n: int
    edges: tuple[Edge, ...]
    marked: frozenset[int] = frozenset()
    special: tuple[tuple[Edge, int], ...] = ()

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class BuildInstance:
    G: Graph
    f: Budget
    omega: WeightAssignment
    rooted: RootedBlockTree
    virtual_edges: frozenset[Edge] = field(default_factory=frozenset)


def _tree_path(edges: Iterable[Edge], a: int, b: int) -> list[int]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    pred = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v not in pred:
                pred[v] = u
                queue.append(v)
    if b not in pred:
        raise InvariantViolation(f"no tree path between {a} and {b}")
    path = [b]
    while path[-1] != a:
        path.append(pred[path[-1]])
    return path[::-1]


def _with_edge(G: Graph, keep: Iterable[int], x: int, y: int) -> tuple[Graph, tuple[int, ...]]:
    """G[keep] + xy, with the local -> parent id map."""
    H, ids = induced_subgraph(G, keep)
    lx, ly = ids.index(x), ids.index(y)
    if not H.has_edge(lx, ly):
        H = Graph.from_edges(H.n, H.edges() + [(lx, ly)])
    return H, ids


def _check_level(G: Graph, f: Budget, w: Weights, table, cminus) -> None:
    for (u, v), c in table.items():
        wu, wv = w.get(((u, v), u)), w.get(((u, v), v))
        if wu is None or wv is None or wu < 0 or wv < 0 or wu + wv != c - 2:
            raise InvariantViolation(f"weights on N2C {(u, v)} do not sum to {c - 2}")
    load = [0] * G.n
    for ((u, v), x), val in w.items():
        if (u, v) in table:
            load[x] += val
    for u in range(G.n):
        if load[u] + cminus[u] - 1 > f[u] - 2:
            raise InvariantViolation(f"vertex {u} over budget: load {load[u]}, f {f[u]}")


def _build(
    G: Graph, f: Budget, w: Weights, root: Edge, specials: Sequence[Edge]
) -> set[Edge]:
    """Recursive construction. All ids are local to G; returns tree edges."""
    if G.n == 2:
        return {(0, 1)}
    dec = _decompose(G)
    cminus = block_cut_counts(G, dec)
    table = n2c_table(G, dec)
    _check_level(G, f, w, table, cminus)

    root_block = dec.block_of_edge[edge_key(*root)]
    pcut, _ = block_parents(dec, root_block)
    special_of = {root_block: root}
    for r, s in specials:
        i = dec.block_of_edge[edge_key(r, s)]
        if i == root_block or i in special_of or pcut.get(i) != r:
            raise InvariantViolation(f"special edge {(r, s)} does not fit the block tree")
        special_of[i] = (r, s)
    if len(special_of) != len(dec.blocks):
        raise InvariantViolation("some block lacks a special edge")

    if not table:
        T: set[Edge] = set()
        for i, block in enumerate(dec.blocks):
            rs = edge_key(*special_of[i])
            if block.is_edge():
                T |= block.edges
                continue
            B, ids = block_graph(G, block)
            cycle = _outer_cycle(B)
            if cycle is None:
                raise InvariantViolation("N2C-free block is not outerplanar")
            cyc = [ids[v] for v in cycle]
            cycle_edges = {edge_key(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])}
            if rs not in cycle_edges:
                raise InvariantViolation(f"special edge {rs} is a chord")
            T |= cycle_edges - {rs}
        return T

    x, y = next(iter(table))
    c_xy = table[(x, y)]
    m = dec.block_containing(x, y)
    avoid = {edge_key(*root), edge_key(*special_of[m])}
    D = None
    for comp in components(G, (x, y)):
        cs = set(comp)
        if not (G.neighbor_set(x) & cs and G.neighbor_set(y) & cs):
            continue
        if any(a in cs or b in cs for a, b in avoid):
            continue
        D = cs
        break
    if D is None:
        raise InvariantViolation(f"no admissible bridge at N2C {(x, y)}")
    if w[((x, y), x)] == 0:
        x, y = y, x
    if w[(edge_key(x, y), x)] < 1:
        raise InvariantViolation("neither endpoint carries weight on the N2C")
    key = edge_key(x, y)

    G2, ids2 = _with_edge(G, D | {x, y}, x, y)
    G1, ids1 = _with_edge(G, (v for v in range(G.n) if v not in D), x, y)
    if not (G1.n < G.n and G2.n < G.n):
        raise InvariantViolation("split does not shrink the graph")

    t2 = n2c_table(G2)
    load2 = {x: 0, y: 0}
    w2: Weights = {}
    for (a, b), c in t2.items():
        pa, pb = ids2[a], ids2[b]
        pk = edge_key(pa, pb)
        if table.get(pk) != c:
            raise InvariantViolation(f"N2C {pk} changes multiplicity in G2")
        for la, pv in ((a, pa), (b, pb)):
            w2[((a, b), la)] = w[(pk, pv)]
            if pv in load2:
                load2[pv] += w[(pk, pv)]

    t1 = n2c_table(G1)
    w1: Weights = {}
    for (a, b), c in t1.items():
        pa, pb = ids1[a], ids1[b]
        pk = edge_key(pa, pb)
        expect = c_xy - 1 if pk == key else table.get(pk)
        if expect != c:
            raise InvariantViolation(f"N2C {pk} changes multiplicity in G1")
        for la, pv in ((a, pa), (b, pb)):
            val = w[(pk, pv)]
            if pk == key and pv == x:
                val -= 1
            w1[((a, b), la)] = val

    f1 = list(f[v] for v in ids1)
    f1[ids1.index(x)] = f[x] - 1 - load2[x]
    f1[ids1.index(y)] = f[y] - load2[y]
    if min(f1[ids1.index(x)], f1[ids1.index(y)]) < 2:
        raise InvariantViolation("split budget dropped below 2")
    f2 = list(f[v] for v in ids2)
    f2[ids2.index(x)] = load2[x] + 2
    f2[ids2.index(y)] = load2[y] + 2

    spec1, spec2 = [], []
    for r, s in specials:
        if r in D or s in D:
            spec2.append((ids2.index(r), ids2.index(s)))
        else:
            spec1.append((ids1.index(r), ids1.index(s)))
    root1 = (ids1.index(root[0]), ids1.index(root[1]))
    root2 = (ids2.index(x), ids2.index(y))

    T1 = {edge_key(ids1[a], ids1[b]) for a, b in _build(G1, tuple(f1), w1, root1, spec1)}
    T2 = {edge_key(ids2[a], ids2[b]) for a, b in _build(G2, tuple(f2), w2, root2, spec2)}
    if key in T2:
        raise InvariantViolation("root edge of G2 ended up in its tree")
    if key in T1:
        drop = key
    else:
        path = _tree_path(T2, x, y)
        drop = edge_key(path[-2], path[-1])
    T = (T1 | T2) - {drop}
    if any(not G.has_edge(a, b) for a, b in T):
        raise InvariantViolation("tree uses an edge outside the graph")
    return T


def build(instance: BuildInstance) -> SpanningTree:
    """Spanning tree T with d_T(v) <= f(v), d_T(v) <= f(v) - 1 on the marked
    vertices, r_i s_i in T when c(G, r_i s_i) = 0 and not in T when it is 1."""
    G, f, rooted = instance.G, instance.f, instance.rooted
    if G.n < 2 or not is_connected(G):
        raise InputError("build needs a connected graph with n >= 2")
    if len(f) != G.n or min(f) < 2:
        raise InputError("budget must give every vertex a bound of at least 2")
    w: Weights = {}
    for (pair, u), val in instance.omega.weights.items():
        w[(edge_key(*pair), u)] = val
    root = rooted.root_edge
    specials = [e for i, e in sorted(rooted.special_edge.items()) if i != rooted.root_block]
    special = []
    for r, s in [root] + specials:
        c = c_pair(G, r, s)
        if c > 1:
            raise InputError(f"special edge {(r, s)} has c(G, rs) = {c} > 1")
        special.append(((r, s), c))
    T = _build(G, f, w, root, specials)
    return SpanningTree(G.n, tuple(sorted(T)), rooted.marked(), tuple(special))


def build_degree_bounded_tree(
    G: Graph,
    f: Union[int, Mapping[int, int], Sequence[int]],
    x: int | None = None,
) -> SpanningTree | ViolationCertificate:
    """Spanning tree with d_T(v) <= f(v) everywhere and d_T(x) <= f(x) - 1, or
    a set violating the component condition."""
    if G.n == 0 or not is_connected(G):
        raise InputError("graph must be connected and nonempty")
    if not is_k4_minor_free(G):
        raise InputError("graph has a K4 minor")
    f = make_budget(G, f)
    x = 0 if x is None else x
    if not 0 <= x < G.n:
        raise InputError(f"vertex {x} out of range")
    if G.n == 1:
        return SpanningTree(1, (), frozenset([x]))
    omega = assign_weights(G, f)
    if isinstance(omega, ViolationCertificate):
        return omega
    dec = _decompose(G)
    block = dec.blocks[dec.blocks_at(x)[0]]
    root = find_special_edge(G, block, x)
    rooted = rooted_block_tree(G, root, dec)
    return build(BuildInstance(G, f, omega, rooted))


def _tree_problems(G: Graph, edges: Sequence[Edge]) -> list[str]:
    problems = []
    keys = [edge_key(*e) for e in edges]
    if len(set(keys)) != len(keys):
        problems.append("repeated edge")
    for u, v in keys:
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            problems.append(f"edge {(u, v)} not in graph")
    if problems:
        return problems
    H = Graph.from_edges(G.n, set(keys))
    if G.n and len(components(H)) != 1:
        problems.append("not spanning/connected")
    if len(set(keys)) != max(G.n - 1, 0):
        problems.append("not acyclic" if len(set(keys)) >= G.n else "too few edges")
    return problems


def verify_tree(
    G: Graph,
    f: Union[int, Mapping[int, int], Sequence[int]],
    T: SpanningTree | Sequence[Edge],
    marked: Iterable[int] = (),
    rs_edges: Iterable[tuple[Edge, int]] = (),
) -> list[str]:
    """Every way ``T`` fails the construction's guarantees; empty when valid."""
    f = make_budget(G, f)
    edges = list(T.edges) if isinstance(T, SpanningTree) else [tuple(e) for e in T]
    problems = _tree_problems(G, edges)
    deg = [0] * G.n
    for u, v in edges:
        if 0 <= u < G.n and 0 <= v < G.n:
            deg[u] += 1
            deg[v] += 1
    for v in range(G.n):
        if deg[v] > f[v]:
            problems.append(f"degree {deg[v]} at {v} exceeds f = {f[v]}")
    for v in sorted(set(marked)):
        if deg[v] > f[v] - 1:
            problems.append(f"marked vertex {v} has degree {deg[v]} > f - 1 = {f[v] - 1}")
    present = {edge_key(*e) for e in edges}
    for (r, s), c in rs_edges:
        inside = edge_key(r, s) in present
        if c == 0 and not inside:
            problems.append(f"special edge {(r, s)} with c = 0 missing from tree")
        if c == 1 and inside:
            problems.append(f"special edge {(r, s)} with c = 1 present in tree")
    return problems


def tree_to_walk(G: Graph, T: SpanningTree | Sequence[Edge]) -> list[int]:
    """Closed walk around the doubled tree, from the lowest vertex, children
    in increasing order. Vertex v occurs d_T(v) times (once if n = 1)."""
    edges = list(T.edges) if isinstance(T, SpanningTree) else [tuple(e) for e in T]
    problems = _tree_problems(G, edges)
    if problems:
        raise InputError("not a spanning tree: " + "; ".join(problems))
    if G.n == 0:
        return []
    kids: list[list[int]] = [[] for _ in range(G.n)]
    for u, v in edges:
        kids[u].append(v)
        kids[v].append(u)
    for k in kids:
        k.sort()
    walk = [0]
    stack = [(0, -1, iter(kids[0]))]
    while stack:
        v, parent, it = stack[-1]
        for u in it:
            if u != parent:
                walk.append(u)
                stack.append((u, v, iter(kids[u])))
                break
        else:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
    if len(walk) > 1:
        walk.pop()
    return walk
