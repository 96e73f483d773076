"""Exhaustive ground truth at desk scale. Every function refuses inputs above
its size limit instead of approximating."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .graph_core import Graph, InputError, components, induced_subgraph
from .n2c_weights import ViolationCertificate, make_budget


class OracleLimitError(InputError):
    """Input exceeds an oracle's exhaustive-search limit."""


def _require(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise OracleLimitError(f"{what}: n={n} exceeds limit {limit}")


def _masks(G: Graph) -> list[int]:
    return [sum(1 << u for u in G.adj[v]) for v in range(G.n)]


@lru_cache(maxsize=4096)
def component_table(G: Graph) -> tuple[int, ...]:
    """c(G - S) for every S, indexed by the bitmask of S."""
    nbr = _masks(G)
    full = (1 << G.n) - 1
    out = []
    for S in range(1 << G.n):
        left = full & ~S
        count = 0
        while left:
            frontier = left & -left
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= nbr[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & left & ~comp
            left &= ~comp
            count += 1
        out.append(count)
    return tuple(out)


def _lex_subsets(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of range(n) in lexicographic order of sorted tuples."""
    def rec(prefix: tuple[int, ...], start: int):
        for v in range(start, n):
            s = prefix + (v,)
            yield s
            yield from rec(s, v + 1)
    yield from rec((), 0)


def check_condition_bruteforce(
    G: Graph, f: Union[int, Mapping[int, int], Sequence[int]], limit: int = 20
) -> ViolationCertificate | None:
    """None if c(G - S) <= sum_{v in S} (f(v) - 1) for every nonempty S, else a
    certificate for the lexicographically first violating S."""
    _require(G.n, limit, "check_condition_bruteforce")
    f = make_budget(G, f)
    table = component_table(G)
    for S in _lex_subsets(G.n):
        mask = sum(1 << v for v in S)
        budget = sum(f[v] - 1 for v in S)
        if table[mask] > budget:
            return ViolationCertificate(frozenset(S), table[mask], budget)
    return None


def toughness(G: Graph, limit: int = 20) -> Fraction | float:
    """Exact toughness; ``math.inf`` for complete graphs."""
    _require(G.n, limit, "toughness")
    if G.m == G.n * (G.n - 1) // 2:
        return math.inf
    table = component_table(G)
    best = None
    for S in range(1 << G.n):
        c = table[S]
        if c >= 2:
            r = Fraction(bin(S).count("1"), c)
            if best is None or r < best:
                best = r
    return best


def exists_degree_bounded_spanning_tree(
    G: Graph,
    f: Union[int, Mapping[int, int], Sequence[int]],
    marked: Iterable[int] = (),
    limit: int = 10,
) -> bool:
    """Backtracking over edge subsets with a rollback union-find."""
    _require(G.n, limit, "exists_degree_bounded_spanning_tree")
    f = make_budget(G, f)
    if G.n <= 1:
        return all(f[v] - 1 >= 0 for v in marked)
    cap = list(f)
    for v in set(marked):
        cap[v] -= 1
    edges = G.edges()
    parent = list(range(G.n))
    deg = [0] * G.n

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    def rec(i: int, joined: int) -> bool:
        if joined == G.n - 1:
            return True
        if len(edges) - i < G.n - 1 - joined:
            return False
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv and deg[u] < cap[u] and deg[v] < cap[v]:
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
            if rec(i + 1, joined + 1):
                return True
            parent[ru] = ru
            deg[u] -= 1
            deg[v] -= 1
        return rec(i + 1, joined)

    return rec(0, 0)


def hamiltonian_path(
    G: Graph, endpoints: Iterable[int] | None = None, limit: int = 24
) -> bool:
    """Whether a hamiltonian path exists with both ends in ``endpoints``
    (anywhere if None). Bitmask DP over reachable end vertices."""
    _require(G.n, limit, "hamiltonian_path")
    n = G.n
    if n == 0:
        return False
    allowed = range(n) if endpoints is None else sorted(set(endpoints))
    end_mask = sum(1 << v for v in allowed)
    if n == 1:
        return bool(end_mask & 1)
    nbr = _masks(G)
    dp = [0] * (1 << n)
    for s in allowed:
        dp[1 << s] |= 1 << s
    for mask in range(1 << n):
        ends = dp[mask]
        while ends:
            low = ends & -ends
            ends ^= low
            step = nbr[low.bit_length() - 1] & ~mask
            while step:
                b = step & -step
                step ^= b
                dp[mask | b] |= b
    return bool(dp[-1] & end_mask)


def count_hamiltonian_cycles(G: Graph, limit: int = 18) -> int:
    """Number of hamiltonian cycles, each counted once (n >= 3)."""
    _require(G.n, limit, "count_hamiltonian_cycles")
    n = G.n
    if n < 3:
        return 0
    nbr = _masks(G)
    # paths from vertex 0; dp[mask][v] = number of paths covering mask ending at v
    dp: list[dict[int, int]] = [dict() for _ in range(1 << n)]
    dp[1][0] = 1
    for mask in range(1, 1 << n, 2):
        for v, ways in dp[mask].items():
            step = nbr[v] & ~mask
            while step:
                b = step & -step
                step ^= b
                u = b.bit_length() - 1
                row = dp[mask | b]
                row[u] = row.get(u, 0) + ways
    closing = sum(w for v, w in dp[-1].items() if nbr[v] & 1)
    return closing // 2


def has_hamiltonian_cycle(G: Graph, limit: int = 24) -> bool:
    _require(G.n, limit, "has_hamiltonian_cycle")
    n = G.n
    if n < 3:
        return False
    nbr = _masks(G)
    dp = [0] * (1 << n)
    dp[1] = 1
    for mask in range(1, 1 << n, 2):
        ends = dp[mask]
        while ends:
            low = ends & -ends
            ends ^= low
            step = nbr[low.bit_length() - 1] & ~mask
            while step:
                b = step & -step
                step ^= b
                dp[mask | b] |= b
    return bool(dp[-1] & nbr[0])


def _connected_parts(G: Graph, k: int) -> Iterator[list[int]]:
    """Partitions of a connected G into k connected parts, as part labels."""
    n = G.n
    nbr = _masks(G)
    label = [0] * n

    def part_connected(mask: int) -> bool:
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt = nbr[low.bit_length() - 1] & mask & ~seen
            seen |= nxt
            frontier |= nxt
        return seen == mask

    def rec(v: int, used: int):
        if n - v < k - used:
            return
        if v == n:
            parts = [0] * k
            for u in range(n):
                parts[label[u]] |= 1 << u
            if all(part_connected(p) for p in parts):
                yield parts
            return
        for p in range(min(used + 1, k)):
            label[v] = p
            yield from rec(v + 1, max(used, p + 1))

    yield from rec(0, 0)


def has_minor(G: Graph, H: Graph, limit: int = 12) -> bool:
    """Whether the connected graph H is a minor of G: some component of G
    splits into |V(H)| connected branch sets joined as H requires."""
    _require(G.n, limit, "has_minor")
    k = H.n
    h_edges = H.edges()
    for comp in components(G):
        if len(comp) < k:
            continue
        C, _ = induced_subgraph(G, comp)
        if C.m < H.m:
            continue
        nbr = _masks(C)
        for parts in _connected_parts(C, k):
            reach = []
            for p in parts:
                r = 0
                q = p
                while q:
                    low = q & -q
                    q ^= low
                    r |= nbr[low.bit_length() - 1]
                reach.append(r)
            adj = {(i, j) for i in range(k) for j in range(k)
                   if i != j and reach[i] & parts[j]}
            if sum(1 for i, j in adj if i < j) < H.m:
                continue
            for perm in permutations(range(k)):
                if all((perm[a], perm[b]) in adj for a, b in h_edges):
                    return True
    return False


K4 = Graph.from_edges(4, combinations(range(4), 2))
K23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def has_k4_minor(G: Graph, limit: int = 12) -> bool:
    """Ground truth for K4-minor containment. A K4 subgraph answers at once;
    otherwise four connected branch sets are searched exhaustively."""
    _require(G.n, limit, "has_k4_minor")
    for a, b, c in ((a, b, c) for a, b in G.edges() for c in G.adj[a] if c > b):
        if G.has_edge(b, c):
            for d in G.adj[a]:
                if d > c and G.has_edge(b, d) and G.has_edge(c, d):
                    return True
    return has_minor(G, K4, limit)


def has_k23_minor(G: Graph, limit: int = 12) -> bool:
    return has_minor(G, K23, limit)


def _refine(G: Graph) -> list[int]:
    """Isomorphism-invariant vertex colours by iterated neighbour multisets."""
    colour = [0] * G.n
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in G.adj[v]))) for v in range(G.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def canonical_form(G: Graph) -> tuple[int, int]:
    """(n, minimal upper-triangle adjacency code) over all vertex orders that
    list colour classes in colour order. The restriction only prunes orders
    that no isomorphism-invariant rule could prefer, so equal codes <=>
    isomorphic graphs."""
    colour = _refine(G)
    classes = [[v for v in range(G.n) if colour[v] == c] for c in sorted(set(colour))]
    pairs = [(i, j) for i in range(G.n) for j in range(i + 1, G.n)]
    best = None

    def orders(idx: int):
        if idx == len(classes):
            yield ()
            return
        for head in permutations(classes[idx]):
            for tail in orders(idx + 1):
                yield head + tail

    for order in orders(0):
        code = 0
        for i, j in pairs:
            code = (code << 1) | G.has_edge(order[i], order[j])
        if best is None or code < best:
            best = code
    return (G.n, best if best is not None else 0)


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ((),)),)
    seen = {}
    for H in _connected_graphs(n - 1):
        base = H.edges()
        # every connected graph has a non-cut vertex, so it arises this way
        for mask in range(1, 1 << (n - 1)):
            new = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            G = Graph.from_edges(n, base + new)
            key = canonical_form(G)
            if key not in seen:
                seen[key] = G
    return tuple(seen[k] for k in sorted(seen))


def enumerate_connected_graphs(n: int, limit: int = 8) -> Iterator[Graph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    _require(n, limit, "enumerate_connected_graphs")
    if n < 1:
        return iter(())
    return iter(_connected_graphs(n))


def is_simplicial(G: Graph, v: int) -> bool:
    nb = G.adj[v]
    return all(G.has_edge(a, b) for a, b in combinations(nb, 2))


def internally_disjoint_paths(G: Graph, u: int, v: int) -> int:
    """Maximum number of internally disjoint uv-paths, by augmenting paths on
    the vertex-split digraph. Independent of the bridge machinery."""
    INF = G.n + 1
    cap: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {}

    def arc(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        out.setdefault(a, []).append(b)
        out.setdefault(b, []).append(a)

    for w in range(G.n):
        arc(2 * w, 2 * w + 1, INF if w in (u, v) else 1)
    for a, b in G.edges():
        arc(2 * a + 1, 2 * b, 1)
        arc(2 * b + 1, 2 * a, 1)
    s, t = 2 * u + 1, 2 * v
    flow = 0
    while True:
        pred = {s: s}
        stack = [s]
        while stack and t not in pred:
            a = stack.pop()
            for b in out.get(a, ()):
                if b not in pred and cap[(a, b)] > 0:
                    pred[b] = a
                    stack.append(b)
        if t not in pred:
            return flow
        b = t
        while b != s:
            a = pred[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


__all__ = [
    "OracleLimitError",
    "check_condition_bruteforce",
    "component_table",
    "count_hamiltonian_cycles",
    "enumerate_connected_graphs",
    "exists_degree_bounded_spanning_tree",
    "canonical_form",
    "has_hamiltonian_cycle",
    "has_k4_minor",
    "has_k23_minor",
    "has_minor",
    "hamiltonian_path",
    "internally_disjoint_paths",
    "is_simplicial",
    "toughness",
]
