"""LBFS and elimination-ordering predicates.

An ordering ``v1, ..., vn`` is read left to right; ``G(i)`` is the subgraph
induced by ``vi`` and everything to its right.  All predicates return an
:class:`OrderingReport` whose witness can be re-checked against the graph by
plain adjacency lookups.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bfs_path, iter_bits, mask_is_clique


@dataclass(frozen=True)
class Ordering:
    """A permutation of ``0..n-1`` together with where it came from."""

    sequence: tuple[int, ...]
    kind: str = "candidate"

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)

    def __getitem__(self, i):
        return self.sequence[i]

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.sequence)}


@dataclass(frozen=True)
class OrderingReport:
    holds: bool
    witness: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    ordering: Ordering | None = None
    hole: tuple[int, ...] | None = None  # induced cycle of length >= 4 when not chordal

    def __bool__(self) -> bool:
        return self.chordal


@dataclass(frozen=True)
class StronglyChordalResult:
    strongly_chordal: bool
    ordering: Ordering | None = None
    stuck: frozenset[int] = field(default_factory=frozenset)  # residual set with no simple vertex

    def __bool__(self) -> bool:
        return self.strongly_chordal


def as_sequence(G: Graph, order: Iterable[int]) -> tuple[int, ...]:
    seq = tuple(order)
    if sorted(seq) != list(range(G.n)):
        raise GraphError(f"ordering is not a permutation of 0..{G.n - 1}: {seq}")
    return seq


def lbfs(G: Graph, seed: int | None = None, priority: Sequence[int] | None = None) -> Ordering:
    """Lexicographic breadth-first search.

    Positions are filled from ``n`` down to ``1``; each step picks an
    unnumbered vertex with the lexicographically largest label.  Ties go to
    the lowest vertex id, or to the lowest ``priority`` value when given.  A
    ``seed`` draws a random priority, which lets tests sample the freedom the
    algorithm leaves.
    """
    n = G.n
    if priority is None:
        if seed is None:
            priority = range(n)
        else:
            perm = list(range(n))
            random.Random(seed).shuffle(perm)
            priority = perm
    labels: list[list[int]] = [[] for _ in range(n)]
    unnumbered = set(range(n))
    sigma = [0] * n
    for i in range(n, 0, -1):
        w = max(unnumbered, key=lambda v: (labels[v], -priority[v]))
        unnumbered.remove(w)
        sigma[i - 1] = w
        for x in iter_bits(G.adj[w]):
            if x in unnumbered:
                labels[x].append(i)
    return Ordering(tuple(sigma), "lbfs")


def check_p_star(G: Graph, order: Iterable[int]) -> OrderingReport:
    """Check the extendable-triple property of LBFS orderings.

    For every ``a < b < c`` with ``ac`` an edge and ``bc`` not, some ``d`` to
    the right of ``c`` must see ``b`` and miss ``a``.  The witness on failure
    is the offending triple ``(a, b, c)``.
    """
    seq = as_sequence(G, order)
    n = len(seq)
    adj = G.adj
    right = [0] * (n + 1)  # right[i] = mask of seq[i:]
    for i in range(n - 1, -1, -1):
        right[i] = right[i + 1] | 1 << seq[i]
    for ci in range(2, n):
        c = seq[ci]
        after_c = right[ci + 1]
        for ai in range(ci - 1):
            a = seq[ai]
            if not adj[a] >> c & 1:
                continue
            for bi in range(ai + 1, ci):
                b = seq[bi]
                if adj[b] >> c & 1:
                    continue
                if not after_c & adj[b] & ~adj[a]:
                    return OrderingReport(False, (a, b, c), "no d right of c sees b and misses a")
    return OrderingReport(True)


def _simplicial(adj, alive: int, v: int) -> bool:
    return mask_is_clique(adj, adj[v] & alive)


def _simple(adj, alive: int, v: int) -> bool:
    nb = adj[v] & alive
    closed = sorted(((adj[u] & alive) | 1 << u for u in iter_bits(nb)), key=int.bit_count)
    return all(a & ~b == 0 for a, b in zip(closed, closed[1:]))


def is_simplicial(G: Graph, v: int) -> bool:
    G._check(v)
    return _simplicial(G.adj, G.all_mask, v)


def is_simple(G: Graph, v: int) -> bool:
    """True iff the closed neighbourhoods of ``N(v)`` form an inclusion chain."""
    G._check(v)
    return _simple(G.adj, G.all_mask, v)


def is_perfect_elimination(G: Graph, order: Iterable[int]) -> OrderingReport:
    """Each vertex must be simplicial among itself and the vertices to its right.

    Witness: ``(v, u, w)`` with ``u, w`` right neighbours of ``v`` that miss each other.
    """
    seq = as_sequence(G, order)
    return _peo_report(G.adj, seq)


def _peo_report(adj, seq: Sequence[int]) -> OrderingReport:
    later = 0
    for v in seq:
        later |= 1 << v
    for v in seq:
        later &= ~(1 << v)
        nb = adj[v] & later
        rest = nb
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            missing = rest & ~adj[u]
            if missing:
                w = (missing & -missing).bit_length() - 1
                return OrderingReport(False, (v, u, w), "right neighbours are not adjacent")
    return OrderingReport(True)


def is_strong_elimination(G: Graph, order: Iterable[int]) -> OrderingReport:
    """Check a strong elimination ordering, naively.

    Needs every ``vi`` simple in ``G(i)`` and, for ``i < j < k`` with
    ``vj, vk`` both adjacent to ``vi``, ``N[vj]`` contained in ``N[vk]``
    within ``G(i)``.  Witness ``(vi,)`` when ``vi`` is not simple, else
    ``(vi, vj, vk)``.  This is O(n^4) set work and only meant for desk-sized
    graphs.
    """
    seq = as_sequence(G, order)
    adj = G.adj
    alive = G.all_mask
    for i, v in enumerate(seq):
        if not _simple(adj, alive, v):
            return OrderingReport(False, (v,), "vertex is not simple in its suffix graph")
        nbs = [u for u in seq[i + 1:] if adj[v] >> u & 1]
        for a in range(len(nbs)):
            ca = (adj[nbs[a]] & alive) | 1 << nbs[a]
            for b in range(a + 1, len(nbs)):
                cb = (adj[nbs[b]] & alive) | 1 << nbs[b]
                if ca & ~cb:
                    return OrderingReport(False, (v, nbs[a], nbs[b]), "closed neighbourhoods not nested in order")
        alive &= ~(1 << v)
    return OrderingReport(True)


def find_chordless_cycle(G: Graph, hint: tuple[int, int, int] | None = None) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, or ``None`` if ``G`` is chordal.

    Tries ``hint = (v, u, w)`` first (``u, w`` non-adjacent neighbours of
    ``v``), then every such triple.  The cycle is ``v`` followed by a shortest
    ``u``-``w`` path that avoids the rest of ``N[v]``.
    """
    adj = G.adj
    full = G.all_mask

    def attempt(v: int, u: int, w: int):
        allowed = full & ~adj[v] & ~(1 << v)
        path = bfs_path(adj, allowed, u, w)
        return None if path is None else (v, *path)

    if hint is not None:
        cyc = attempt(*hint)
        if cyc is not None:
            return cyc
    for v in range(G.n):
        nb = list(iter_bits(adj[v]))
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if not adj[u] >> w & 1:
                    cyc = attempt(v, u, w)
                    if cyc is not None:
                        return cyc
    return None


def is_chordal(G: Graph) -> ChordalResult:
    """LBFS order checked as a perfect elimination ordering; hole witness otherwise."""
    sigma = lbfs(G)
    report = _peo_report(G.adj, sigma.sequence)
    if report.holds:
        return ChordalResult(True, sigma)
    cycle = find_chordless_cycle(G, report.witness)
    assert cycle is not None, "LBFS failed as a PEO but no chordless cycle exists"
    return ChordalResult(False, hole=cycle)


def is_strongly_chordal(G: Graph) -> StronglyChordalResult:
    """Greedy simple elimination: repeatedly drop the lowest-id simple vertex."""
    adj = G.adj
    alive = G.all_mask
    seq = []
    while alive:
        for v in iter_bits(alive):
            if _simple(adj, alive, v):
                seq.append(v)
                alive &= ~(1 << v)
                break
        else:
            return StronglyChordalResult(False, stuck=frozenset(iter_bits(alive)))
    return StronglyChordalResult(True, Ordering(tuple(seq), "candidate"))
