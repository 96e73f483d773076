"""Simple undirected graphs on dense integer ids, plus component and bridge primitives."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InputError(ValueError):
    """Raised when an operation's precondition is violated by its input."""


class InvariantViolation(AssertionError):
    """Raised when a property guaranteed by construction fails to hold."""


Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    _nbr_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency length does not match vertex count")
        sets = []
        for v, nbrs in enumerate(self.adj):
            s = frozenset(nbrs)
            if len(s) != len(nbrs):
                raise InputError(f"parallel edge at vertex {v}")
            if v in s:
                raise InputError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbour {u} of {v} out of range")
            sets.append(s)
        for v, s in enumerate(sets):
            for u in s:
                if v not in sets[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_nbr_sets", tuple(sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]


def vertex_set(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Validate ``S`` against the vertex range of ``G``."""
    S = frozenset(S)
    for v in S:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise InputError(f"vertex {v!r} out of range for n={G.n}")
    return S


def components(G: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Components of ``G - removed``, each sorted, ordered by smallest vertex."""
    seen = [False] * G.n
    for v in removed:
        seen[v] = True
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(components(G)) == 1


def component_count(G: Graph, S: Iterable[int] = ()) -> int:
    """c(G - S). Zero exactly when S covers every vertex."""
    return len(components(G, vertex_set(G, S)))


@dataclass(frozen=True)
class Bridge:
    kind: str  # "trivial" or "nontrivial"
    vertices: frozenset[int]
    attachments: frozenset[int]

    @property
    def interior(self) -> frozenset[int]:
        return self.vertices - self.attachments


@dataclass(frozen=True)
class BridgeReport:
    S: frozenset[int]
    bridges: tuple[Bridge, ...]

    @property
    def nontrivial(self) -> list[Bridge]:
        return [b for b in self.bridges if b.kind == "nontrivial"]

    @property
    def trivial(self) -> list[Bridge]:
        return [b for b in self.bridges if b.kind == "trivial"]


def bridges(G: Graph, S: Iterable[int]) -> BridgeReport:
    """All S-bridges: edges inside S (trivial) and components of G - S with
    their attachments (nontrivial). Trivial bridges are listed first."""
    S = vertex_set(G, S)
    if not S:
        raise InputError("bridges() needs a nonempty vertex set")
    out = []
    for u, v in G.edges():
        if u in S and v in S:
            out.append(Bridge("trivial", frozenset((u, v)), frozenset((u, v))))
    for comp in components(G, S):
        att = frozenset(u for v in comp for u in G.adj[v] if u in S)
        out.append(Bridge("nontrivial", frozenset(comp) | att, att))
    return BridgeReport(S, tuple(out))


def c_pair(G: Graph, u: int, v: int) -> int:
    """c(G, uv): nontrivial {u,v}-bridges attaching at both u and v.

    Defined whether or not uv is an edge.
    """
    vertex_set(G, (u, v))
    if u == v:
        raise InputError("c_pair needs two distinct vertices")
    nu, nv = G.neighbor_set(u), G.neighbor_set(v)
    count = 0
    for comp in components(G, (u, v)):
        if any(w in nu for w in comp) and any(w in nv for w in comp):
            count += 1
    return count


def induced_subgraph(G: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``keep``; returns it with the new-id -> old-id map."""
    old = tuple(sorted(vertex_set(G, keep)))
    new_id = {v: i for i, v in enumerate(old)}
    adj = tuple(
        tuple(sorted(new_id[u] for u in G.adj[v] if u in new_id)) for v in old
    )
    return Graph(len(old), adj), old


def induced_without(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G - S with the new-id -> old-id map."""
    S = vertex_set(G, S)
    if len(S) == G.n:
        raise InputError("cannot delete every vertex")
    return induced_subgraph(G, (v for v in range(G.n) if v not in S))
