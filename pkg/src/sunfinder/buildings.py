"""Detectors for buildings, gems, bulls with a given nose and near buildings."""

from __future__ import annotations

from typing import Iterator

from .certificates import BuildingCertificate, GemWitness, NoseBull
from .graph import Graph, bfs_path, iter_bits


def _building_at(adj, alive: int, v: int, x: int, y: int) -> BuildingCertificate | None:
    """Building with apex ``v`` and chord ``xy`` (``x < y``, both adjacent to ``v``)."""
    # Interior avoids N[v] and the common neighbours of x and y; the xy edge is skipped.
    allowed = alive & ~adj[v] & ~(1 << v) & ~(adj[x] & adj[y])
    path = bfs_path(adj, allowed, x, y, direct=False)
    if path is None:
        return None
    return BuildingCertificate(hole=(v, *path), chord=(x, y), apex=v)


def find_building_in(adj, alive: int) -> BuildingCertificate | None:
    for v in iter_bits(alive):
        nb = adj[v] & alive
        for x in iter_bits(nb):
            for y in iter_bits(nb & adj[x] & ~((2 << x) - 1)):
                cert = _building_at(adj, alive, v, x, y)
                if cert is not None:
                    return cert
    return None


def find_building(G: Graph) -> BuildingCertificate | None:
    """Return a building certificate, or ``None`` when ``G`` is building-free.

    For every apex ``v`` and adjacent pair ``x < y`` in ``N(v)`` (ascending),
    look for a shortest ``x``-``y`` path that avoids ``N[v]``, avoids the
    common neighbours of ``x`` and ``y`` and does not use the edge ``xy``.
    Such a path always has at least two interior vertices and, being
    shortest, closes a hole with ``v``.  The first hit is returned with the
    hole listed from the apex and the lower chord endpoint second.
    """
    return find_building_in(G.adj, G.all_mask)


def list_triangles(G: Graph) -> list[tuple[int, int, int]]:
    """All triangles as sorted triples, in lexicographic order.

    Each edge is oriented from lower to higher (degree, id) rank, so every
    vertex scans at most O(sqrt(m)) out-neighbours: O(m^1.5) overall.
    """
    adj = G.adj
    rank = sorted(range(G.n), key=lambda v: (adj[v].bit_count(), v))
    pos = [0] * G.n
    for i, v in enumerate(rank):
        pos[v] = i
    out_mask = [0] * G.n
    for v in range(G.n):
        for u in iter_bits(adj[v]):
            if pos[u] > pos[v]:
                out_mask[v] |= 1 << u
    found = []
    for v in range(G.n):
        ov = out_mask[v]
        for u in iter_bits(ov):
            for w in iter_bits(ov & out_mask[u]):
                found.append(tuple(sorted((v, u, w))))
    found.sort()
    return found


def _apex_triples(G: Graph) -> Iterator[tuple[int, int, int]]:
    triples = []
    for a, b, c in list_triangles(G):
        triples.extend(((a, b, c), (b, a, c), (c, a, b)))
    triples.sort()
    return iter(triples)


def find_building_fast(G: Graph) -> BuildingCertificate | None:
    """Same contract as :func:`find_building`, driven by the triangle list.

    The (apex, x, y) triples are visited in the same order as the plain
    detector, so both return the same certificate.
    """
    adj = G.adj
    alive = G.all_mask
    for v, x, y in _apex_triples(G):
        cert = _building_at(adj, alive, v, x, y)
        if cert is not None:
            return cert
    return None


def find_gem(G: Graph) -> GemWitness | None:
    """A hub plus an induced P4 inside its neighbourhood, or ``None``."""
    adj = G.adj
    for e in range(G.n):
        ne = adj[e]
        for b in iter_bits(ne):
            for c in iter_bits(ne & adj[b]):
                a_side = ne & adj[b] & ~adj[c] & ~(1 << c)
                d_side = ne & adj[c] & ~adj[b] & ~(1 << b)
                for a in iter_bits(a_side):
                    rest = d_side & ~adj[a] & ~(1 << a)
                    if rest:
                        d = (rest & -rest).bit_length() - 1
                        return GemWitness(path=(a, b, c, d), hub=e)
    return None


def bull_with_nose_in(adj, alive: int, x: int) -> NoseBull | None:
    nx_ = adj[x] & alive
    for a1 in iter_bits(nx_):
        for b1 in iter_bits(nx_ & adj[a1]):
            if b1 < a1:
                continue
            far = alive & ~adj[x] & ~(1 << x)
            a_arm = far & adj[a1] & ~adj[b1]
            b_arm = far & adj[b1] & ~adj[a1]
            for a2 in iter_bits(a_arm):
                rest = b_arm & ~adj[a2] & ~(1 << a2)
                if rest:
                    b2 = (rest & -rest).bit_length() - 1
                    return NoseBull(nose=x, path=(a2, a1, b1, b2))
    return None


def find_bull_with_nose(G: Graph, x: int) -> NoseBull | None:
    """A bull in ``G`` whose nose is ``x``, or ``None``.

    Only P4s through an adjacent pair of ``x``'s neighbours are tried, which
    keeps the search quartic rather than quintic.
    """
    G._check(x)
    return bull_with_nose_in(G.adj, G.all_mask, x)


def near_building_in(adj, alive: int) -> tuple[int, ...] | None:
    for v in iter_bits(alive):
        nv = adj[v] & alive
        region = alive & ~nv & ~(1 << v)
        for p in iter_bits(nv):
            for q in iter_bits(nv & adj[p]):
                # w1 = p, wj = q; the path w2..w(j-1) lives outside N[v], and
                # only w2 may touch p.
                inner = region & ~adj[p] & ~(1 << p)
                for w2 in iter_bits(region & adj[p] & ~(1 << q)):
                    targets = adj[q] & ~(1 << w2)
                    path = _bfs_to_set(adj, inner & ~(1 << w2), w2, targets)
                    if path is not None:
                        return (v, p, *path, q)
    return None


def _bfs_to_set(adj, allowed: int, source: int, targets: int) -> list[int] | None:
    parent = {source: source}
    frontier = [source]
    seen = 1 << source
    while frontier:
        nxt = []
        for u in frontier:
            fresh = adj[u] & allowed & ~seen
            seen |= fresh
            for w in iter_bits(fresh):
                parent[w] = u
                if targets >> w & 1:
                    path = [w]
                    while w != source:
                        w = parent[w]
                        path.append(w)
                    return path[::-1]
                nxt.append(w)
        frontier = nxt
    return None


def find_near_building(G: Graph) -> tuple[int, ...] | None:
    """A near building as ``(v, w1, ..., wj)``, or ``None``.

    ``v`` sees exactly ``w1`` and ``wj``, ``w1..wj`` is a path closed by
    ``w1wj``, and ``wj`` may also see any ``wi`` with ``2 <= i <= j-2``.  For
    each triangle ``v, w1, wj`` a BFS from each candidate ``w2`` (outside
    ``N[v]`` and ``N[w1]``) reaches the nearest neighbour of ``wj``; the BFS
    path is induced, and ``wj``'s extra adjacencies are all permitted.
    """
    return near_building_in(G.adj, G.all_mask)
