"""Nontrivial 2-cuts, the weight-distribution flow network, and violation
certificates for the component condition c(G - S) <= sum_{v in S} (f(v) - 1)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .decomposition import BlockDecomposition, _decompose, _raw_blocks, block_graph
from .graph_core import (
    Edge,
    Graph,
    InputError,
    InvariantViolation,
    c_pair,
    component_count,
    components,
    edge_key,
    is_connected,
    vertex_set,
)

Budget = tuple[int, ...]


def make_budget(G: Graph, f: Union[int, Mapping[int, int], Sequence[int]]) -> Budget:
    """Normalise a uniform bound, a mapping or a sequence into a per-vertex tuple."""
    if isinstance(f, int):
        out = (f,) * G.n
    elif isinstance(f, Mapping):
        missing = [v for v in range(G.n) if v not in f]
        if missing:
            raise InputError(f"budget missing for vertices {missing}")
        out = tuple(int(f[v]) for v in range(G.n))
    else:
        out = tuple(int(x) for x in f)
        if len(out) != G.n:
            raise InputError("budget length does not match vertex count")
    low = [v for v, k in enumerate(out) if k < 2]
    if low:
        raise InputError(f"budget below 2 at vertices {low}")
    return out


@dataclass(frozen=True, order=True)
class N2C:
    u: int
    v: int
    multiplicity: int

    @property
    def pair(self) -> Edge:
        return (self.u, self.v)


def block_cut_counts(G: Graph, dec: BlockDecomposition) -> list[int]:
    """c(G - v) for every v of a connected G with n >= 2: the number of blocks at v."""
    count = [0] * G.n
    for b in dec.blocks:
        for v in b.vertices:
            count[v] += 1
    return count


def n2c_table(G: Graph, dec: BlockDecomposition | None = None) -> dict[Edge, int]:
    """Map (u, v), u < v, to c(G, uv) for every pair with c(G, uv) >= 3.

    Within a 2-connected block B every component of B - {u,v} attaches at
    both u and v, so c(B, uv) is the number of blocks of B - u containing v.
    Pairs outside a common block have c = 0, and c(G, uv) = c(B, uv).
    """
    if dec is None:
        dec = _decompose(G)
    out: dict[Edge, int] = {}
    for block in dec.blocks:
        if len(block.vertices) < 5:
            continue
        B, ids = block_graph(G, block)
        for u in range(B.n):
            if B.degree(u) < 3:
                continue
            count = [0] * B.n
            for edges in _raw_blocks(B, skip=u):
                for w in {x for e in edges for x in e}:
                    count[w] += 1
            for v in range(B.n):
                if count[v] >= 3 and ids[u] < ids[v]:
                    out[(ids[u], ids[v])] = count[v]
    return dict(sorted(out.items()))


def enumerate_n2cs(G: Graph) -> list[N2C]:
    if not is_connected(G):
        raise InputError("enumerate_n2cs needs a connected graph")
    return [N2C(u, v, c) for (u, v), c in n2c_table(G).items()]


@dataclass(frozen=True)
class WeightAssignment:
    """Nonnegative weights omega(F, u) for every N2C F and endpoint u."""

    n2cs: tuple[N2C, ...]
    weights: Mapping[tuple[Edge, int], int]

    def __getitem__(self, key: tuple[Edge, int]) -> int:
        (a, b), u = key
        return self.weights[(edge_key(a, b), u)]

    def load(self, u: int) -> int:
        return sum(w for (_, x), w in self.weights.items() if x == u)

    def violations(self, G: Graph, f: Budget) -> list[str]:
        """Arithmetic check of the equality and load constraints, independent
        of how the weights were produced."""
        problems = []
        table = n2c_table(G)
        if {F.pair: F.multiplicity for F in self.n2cs} != table:
            problems.append("N2C list does not match the graph")
        for (u, v), c in table.items():
            wu = self.weights.get(((u, v), u), -1)
            wv = self.weights.get(((u, v), v), -1)
            if wu < 0 or wv < 0:
                problems.append(f"negative or missing weight on {(u, v)}")
            elif wu + wv != c - 2:
                problems.append(f"weights on {(u, v)} sum to {wu + wv}, need {c - 2}")
        for u in range(G.n):
            slack = f[u] - component_count(G, (u,)) - 1
            if self.load(u) > slack:
                problems.append(f"load {self.load(u)} at {u} exceeds {slack}")
        return problems


@dataclass(frozen=True)
class ViolationCertificate:
    """A nonempty U with c(G - U) > sum_{v in U} (f(v) - 1)."""

    U: frozenset[int]
    observed: int
    budget: int

    def verify(self, G: Graph, f: Budget) -> bool:
        """Recompute both sides from scratch."""
        if not self.U:
            return False
        observed = component_count(G, self.U)
        budget = sum(f[v] - 1 for v in self.U)
        return observed == self.observed and budget == self.budget and observed > budget

    def as_dict(self) -> dict:
        return {"U": sorted(self.U), "observed": self.observed, "budget": self.budget}


def certificate_for(G: Graph, f: Budget, U: Iterable[int]) -> ViolationCertificate:
    U = vertex_set(G, U)
    return ViolationCertificate(U, component_count(G, U), sum(f[v] - 1 for v in U))


def counting_lower_bound(
    G: Graph, F1: Iterable[N2C | Sequence[int]], U: Iterable[int]
) -> int:
    """Lower bound on c(G - U) for U spanning a connected subgraph J of the
    graph whose edges are the N2Cs in F1:

        sum_{uv in E(J)} (c(G,uv) - 2) + sum_{w in U} (c(G - w) - 1) + |U|
    """
    U = vertex_set(G, U)
    if not U:
        raise InputError("U must be nonempty")
    mult: dict[Edge, int] = {}
    for F in F1:
        if isinstance(F, N2C):
            key, c = F.pair, F.multiplicity
        else:
            key = edge_key(*F)
            c = c_pair(G, *key)
        if c < 3:
            raise InputError(f"{key} is not an N2C")
        mult[key] = c
    J = {key: c for key, c in mult.items() if key[0] in U and key[1] in U}
    adj: dict[int, list[int]] = {u: [] for u in U}
    for a, b in J:
        adj[a].append(b)
        adj[b].append(a)
    start = min(U)
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    if seen != set(U):
        raise InputError("U does not induce a connected subgraph of H1")
    return (
        sum(c - 2 for c in J.values())
        + sum(component_count(G, (w,)) - 1 for w in U)
        + len(U)
    )


class _FlowNetwork:
    """Residual network with integer capacities; Edmonds-Karp max flow."""

    def __init__(self, size: int):
        self.cap: list[dict[int, int]] = [{} for _ in range(size)]

    def add_arc(self, a: int, b: int, c: int):
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            pred = {s: s}
            queue = deque([s])
            while queue and t not in pred:
                a = queue.popleft()
                for b, c in self.cap[a].items():
                    if c > 0 and b not in pred:
                        pred[b] = a
                        queue.append(b)
            if t not in pred:
                return total
            push = None
            b = t
            while b != s:
                a = pred[b]
                push = self.cap[a][b] if push is None else min(push, self.cap[a][b])
                b = a
            b = t
            while b != s:
                a = pred[b]
                self.cap[a][b] -= push
                self.cap[b][a] += push
                b = a
            total += push

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen


def assign_weights(
    G: Graph, f: Union[int, Mapping[int, int], Sequence[int]]
) -> WeightAssignment | ViolationCertificate:
    """Distribute c(G,F) - 2 over the endpoints of every N2C F within the
    per-vertex slack f(u) - c(G - u) - 1, or return a set U violating the
    component condition.

    A weight assignment may exist even when the condition fails; a returned
    certificate is always a genuine violation.
    """
    if not is_connected(G):
        raise InputError("assign_weights needs a connected graph")
    f = make_budget(G, f)
    if G.n == 1:
        return WeightAssignment((), {})
    dec = _decompose(G)
    cminus = block_cut_counts(G, dec)
    for v in range(G.n):
        if cminus[v] > f[v] - 1:
            return certificate_for(G, f, (v,))

    table = n2c_table(G, dec)
    n2cs = tuple(N2C(u, v, c) for (u, v), c in table.items())
    if not n2cs:
        return WeightAssignment((), {})
    W = sorted({x for F in n2cs for x in F.pair})
    phi = sum(F.multiplicity - 2 for F in n2cs)

    # node ids: s=0, t=1, N2Cs from 2, then the vertices of W
    s, t = 0, 1
    fnode = {F.pair: 2 + i for i, F in enumerate(n2cs)}
    wnode = {u: 2 + len(n2cs) + i for i, u in enumerate(W)}
    net = _FlowNetwork(2 + len(n2cs) + len(W))
    for F in n2cs:
        net.add_arc(s, fnode[F.pair], F.multiplicity - 2)
        for u in F.pair:
            net.add_arc(fnode[F.pair], wnode[u], phi + 1)
    for u in W:
        net.add_arc(wnode[u], t, f[u] - cminus[u] - 1)

    value = net.max_flow(s, t)
    if value == phi:
        weights = {}
        for F in n2cs:
            for u in F.pair:
                # flow on F->u equals the residual capacity of u->F
                weights[(F.pair, u)] = net.cap[wnode[u]][fnode[F.pair]]
        return WeightAssignment(n2cs, weights)

    side = net.reachable(s)
    F1 = [F for F in n2cs if fnode[F.pair] in side]
    W1 = [u for u in W if wnode[u] in side]
    H1 = Graph.from_edges(
        len(W1),
        [(W1.index(F.u), W1.index(F.v)) for F in F1],
    )
    for comp in components(H1):
        U = [W1[i] for i in comp]
        Uset = set(U)
        lhs = sum(F.multiplicity - 2 for F in F1 if F.u in Uset and F.v in Uset)
        lhs += sum(cminus[w] - 1 for w in U)
        if lhs > sum(f[w] - 2 for w in U):
            cert = certificate_for(G, f, U)
            if cert.observed <= cert.budget:
                raise InvariantViolation(f"min-cut set {sorted(U)} is not a violation")
            return cert
    raise InvariantViolation("flow deficit without a violating component")
