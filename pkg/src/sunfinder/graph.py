"""Immutable simple undirected graphs over dense vertex ids.

Adjacency is stored as one Python int per vertex, used as a bitset: bit ``u``
of ``adj[v]`` is set iff ``uv`` is an edge.  Vertex sets passed between the
internal kernels are bitmasks of the same shape; the public helpers return
``frozenset`` so callers never have to know about the encoding.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graph input (bad ids, self-loops)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build one with :func:`from_edges`; instances are never mutated.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj
        self.m = sum(a.bit_count() for a in adj) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        """Return a new graph with ``extra`` edges added."""
        adj = list(self.adj)
        for u, v in extra:
            if u == v:
                raise GraphError(f"self-loop ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair!r} has an id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop {pair!r}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def neighbors(G: Graph, v: int) -> frozenset[int]:
    return G.neighbors(v)


def non_neighbors(G: Graph, v: int) -> frozenset[int]:
    """``M(v)``: every vertex that is neither ``v`` nor adjacent to it."""
    G._check(v)
    return frozenset(iter_bits(G.all_mask & ~G.adj[v] & ~(1 << v)))


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``S``.

    Returns the new graph and ``old_ids`` with ``old_ids[new] == old``; new ids
    follow the ascending order of the old ones.
    """
    old_ids = sorted(set(S))
    for v in old_ids:
        G._check(v)
    index = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        row = 0
        for u in iter_bits(G.adj[old]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        adj.append(row)
    return Graph(len(old_ids), tuple(adj)), old_ids


def induced_mask(adj: tuple[int, ...], alive: int) -> tuple[Graph, list[int]]:
    """Same as :func:`induced_subgraph` for a bitmask vertex set."""
    return induced_subgraph(Graph(len(adj), adj), iter_bits(alive))


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    mask = to_mask(S)
    return mask_is_clique(G.adj, mask)


def mask_is_clique(adj: tuple[int, ...] | list[int], mask: int) -> bool:
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if rest & ~adj[v]:
            return False
    return True


def complement(G: Graph) -> Graph:
    full = G.all_mask
    return Graph(G.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(G.adj)))


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return from_edges(G.n, ((perm[u], perm[v]) for u, v in G.edges()))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return from_edges(G.n + H.n, G.edges() + [(u + shift, v + shift) for u, v in H.edges()])


def bfs_path(
    adj: tuple[int, ...] | list[int],
    allowed: int,
    source: int,
    target: int,
    direct: bool = True,
) -> list[int] | None:
    """Shortest ``source``-``target`` path using only ``allowed`` as interior.

    ``source`` and ``target`` need not be in ``allowed``.  With
    ``direct=False`` the edge ``source``-``target`` itself is ignored.
    Returns the vertex list from source to target, or ``None``.
    """
    if source == target:
        return [source]
    allowed &= ~(1 << source | 1 << target)
    parent = {source: source}
    frontier = [source]
    seen = 1 << source
    while frontier:
        nxt = []
        for u in frontier:
            if adj[u] >> target & 1 and (direct or u != source):
                path = [target, u]
                while u != source:
                    u = parent[u]
                    path.append(u)
                path.reverse()
                return path
            fresh = adj[u] & allowed & ~seen
            seen |= fresh
            for w in iter_bits(fresh):
                parent[w] = u
                nxt.append(w)
        frontier = nxt
    return None


def components(G: Graph) -> list[list[int]]:
    left = G.all_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= G.adj[v]
            frontier = grow & ~comp
            comp |= frontier
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1
