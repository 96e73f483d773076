"""Block structure, special edges, outer cycles and K4-minor recognition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

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


def _raw_blocks(G: Graph, skip: int = -1) -> list[list[Edge]]:
    """Edge lists of the blocks of ``G - skip`` (iterative Hopcroft-Tarjan).

    Isolated vertices produce no block.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[Edge]] = []
    t = 0
    for root in range(n):
        if root == skip or disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(G.adj[root]))]
        estack: list[Edge] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == skip:
                    continue
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(G.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == (parent, v):
                            break
                    blocks.append(block)
    return blocks


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def is_edge(self) -> bool:
        return len(self.vertices) == 2


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cutvertices: frozenset[int]
    block_of_edge: Mapping[Edge, int]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def block_containing(self, u: int, v: int) -> int | None:
        """Index of the unique block holding both u and v, if any."""
        for i, b in enumerate(self.blocks):
            if u in b.vertices and v in b.vertices:
                return i
        return None


def _decompose(G: Graph) -> BlockDecomposition:
    raw = []
    for edges in _raw_blocks(G):
        es = frozenset(edge_key(u, v) for u, v in edges)
        vs = frozenset(x for e in es for x in e)
        raw.append(Block(vs, es))
    raw.sort(key=lambda b: sorted(b.edges))
    count = [0] * G.n
    for b in raw:
        for v in b.vertices:
            count[v] += 1
    cut = frozenset(v for v in range(G.n) if count[v] >= 2)
    of_edge = {e: i for i, b in enumerate(raw) for e in b.edges}
    return BlockDecomposition(tuple(raw), cut, of_edge)


def blocks_and_cutvertices(G: Graph) -> BlockDecomposition:
    if G.n < 2 or not is_connected(G):
        raise InputError("block decomposition needs a connected graph with n >= 2")
    return _decompose(G)


def block_graph(G: Graph, block: Block) -> tuple[Graph, tuple[int, ...]]:
    # blocks are induced subgraphs
    return induced_subgraph(G, block.vertices)


def find_special_edge(G: Graph, block: Block, x: int) -> Edge:
    """First edge xy of ``block`` (ascending y) with c(G, xy) <= 1.

    Always exists for a block through a non-isolated x; failure is a bug.
    """
    if x not in block.vertices:
        raise InputError(f"vertex {x} is not in the block")
    candidates = [y for y in G.adj[x] if edge_key(x, y) in block.edges]
    if not candidates:
        raise InputError(f"block has no edge at {x}")
    for y in candidates:
        if c_pair(G, x, y) <= 1:
            return (x, y)
    raise InvariantViolation(f"no edge at {x} in block with c(G, xy) <= 1")


@dataclass(frozen=True)
class RootedBlockTree:
    """Block tree rooted at the block of ``special_edge[root_block]``.

    ``special_edge[i]`` is an ordered pair (r_i, s_i); for non-root blocks r_i
    is the parent cutvertex.
    """

    decomposition: BlockDecomposition
    root_block: int
    parent_cutvertex: Mapping[int, int]
    parent_block: Mapping[int, int]
    special_edge: Mapping[int, Edge]

    @property
    def root_edge(self) -> Edge:
        return self.special_edge[self.root_block]

    def marked(self) -> frozenset[int]:
        """{r_0} together with every s_i."""
        r0, _ = self.root_edge
        return frozenset([r0]) | frozenset(s for _, s in self.special_edge.values())


def block_parents(
    dec: BlockDecomposition, root_block: int
) -> tuple[dict[int, int], dict[int, int]]:
    """Parent cutvertex and parent block of every non-root block."""
    at: dict[int, list[int]] = {}
    for i, b in enumerate(dec.blocks):
        for v in b.vertices:
            if v in dec.cutvertices:
                at.setdefault(v, []).append(i)
    pcut: dict[int, int] = {}
    pblock: dict[int, int] = {}
    seen = {root_block}
    queue = deque([root_block])
    while queue:
        i = queue.popleft()
        for v in sorted(dec.blocks[i].vertices & dec.cutvertices):
            for j in at[v]:
                if j not in seen:
                    seen.add(j)
                    pcut[j] = v
                    pblock[j] = i
                    queue.append(j)
    if len(seen) != len(dec.blocks):
        raise InvariantViolation("block-cutvertex tree is not connected")
    return pcut, pblock


def rooted_block_tree(
    G: Graph, root_edge: Edge, dec: BlockDecomposition | None = None
) -> RootedBlockTree:
    """Root the block tree at ``root_edge`` and pick a special edge per block."""
    if dec is None:
        dec = blocks_and_cutvertices(G)
    r0, s0 = root_edge
    root = dec.block_of_edge.get(edge_key(r0, s0))
    if root is None:
        raise InputError(f"root edge {root_edge} is not an edge of the graph")
    if c_pair(G, r0, s0) > 1:
        raise InputError(f"root edge {root_edge} has c(G, r0s0) > 1")
    pcut, pblock = block_parents(dec, root)
    special = {root: (r0, s0)}
    for i, r in pcut.items():
        special[i] = find_special_edge(G, dec.blocks[i], r)
    return RootedBlockTree(dec, root, pcut, pblock, special)


def _outer_cycle(B: Graph) -> list[int] | None:
    """Outer hamiltonian cycle of a 2-connected graph B with n >= 3, or None
    if B is not outerplanar.

    Outer edges are exactly those uv with B - {u,v} connected; the remaining
    edges must be pairwise non-crossing chords of the resulting cycle.
    """
    n = B.n
    sel: list[list[int]] = [[] for _ in range(n)]
    chords = []
    for u, v in B.edges():
        if len(components(B, (u, v))) <= 1:
            sel[u].append(v)
            sel[v].append(u)
        else:
            chords.append((u, v))
    if any(len(s) != 2 for s in sel):
        return None
    cycle = [0]
    prev, cur = -1, 0
    while True:
        a, b = sel[cur]
        nxt = a if a != prev else b
        if nxt == 0:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > n:
            return None
    if len(cycle) != n:
        return None
    pos = {v: i for i, v in enumerate(cycle)}
    spans = sorted(
        (min(pos[u], pos[v]), -max(pos[u], pos[v])) for u, v in chords
    )
    open_ends: list[int] = []
    for a, negb in spans:
        b = -negb
        while open_ends and open_ends[-1] <= a:
            open_ends.pop()
        if open_ends and b > open_ends[-1]:
            return None
        open_ends.append(b)
    if cycle[1] > cycle[-1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def _is_two_connected(B: Graph) -> bool:
    return B.n >= 3 and is_connected(B) and len(_raw_blocks(B)) == 1


def outer_hamiltonian_cycle(B: Graph) -> list[int]:
    """The unique hamiltonian cycle of a 2-connected outerplanar graph,
    starting at vertex 0 and continuing to its smaller cycle neighbour."""
    if not _is_two_connected(B):
        raise InputError("outer_hamiltonian_cycle needs a 2-connected graph")
    cycle = _outer_cycle(B)
    if cycle is None:
        raise InputError("graph is not outerplanar")
    return cycle


def is_outerplanar(G: Graph) -> bool:
    for block in _decompose(G).blocks:
        if len(block.vertices) >= 3:
            B, _ = block_graph(G, block)
            if _outer_cycle(B) is None:
                return False
    return True


def _series_parallel_block(G: Graph, vertices: Iterable[int]) -> bool:
    """Reduce a 2-connected block by suppressing degree-2 vertices; parallel
    edges merge automatically in the set adjacency. SP iff two vertices remain."""
    vs = set(vertices)
    adj = {v: set(u for u in G.adj[v] if u in vs) for v in vs}
    queue = deque(v for v in sorted(adj) if len(adj[v]) == 2)
    while queue and len(adj) > 2:
        v = queue.popleft()
        if v not in adj or len(adj[v]) != 2:
            continue
        a, b = sorted(adj.pop(v))
        adj[a].discard(v)
        adj[b].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        for w in (a, b):
            if len(adj[w]) == 2:
                queue.append(w)
    return len(adj) == 2


def is_k4_minor_free(G: Graph) -> bool:
    return all(
        len(b.vertices) < 4 or _series_parallel_block(G, b.vertices)
        for b in _decompose(G).blocks
    )
