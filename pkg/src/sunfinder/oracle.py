"""Brute-force ground truth for the structures the detectors look for.

Nothing here imports the detectors.  Searches enumerate vertex subsets (or,
for suns, center cliques) and test an induced-subgraph predicate written
straight from the definitions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .certificates import SunCertificate
from .graph import Graph, iter_bits, to_mask

DEFAULT_BOUND = 14


class OracleRefusal(RuntimeError):
    """The requested search would need subsets larger than the bound."""


class StructureKind(str, enum.Enum):
    SUN = "k-sun"
    BUILDING = "building"
    GEM = "gem"
    BULL = "bull"  # bull whose nose is a given vertex
    NEAR_BUILDING = "near-building"
    HOLE = "hole"  # induced cycle on >= 5 vertices
    CYCLE = "cycle"  # induced cycle on >= 4 vertices (chordality)
    HOUSE = "house"
    DOMINO = "domino"
    P4 = "p4"  # induced P4 inside a given vertex set


FIXED_SIZE = {
    StructureKind.GEM: 5,
    StructureKind.BULL: 5,
    StructureKind.HOUSE: 5,
    StructureKind.DOMINO: 6,
    StructureKind.P4: 4,
}


@dataclass(frozen=True)
class Witness:
    kind: StructureKind
    vertices: tuple[int, ...]
    roles: dict = field(default_factory=dict, compare=False)


def _sub_adj(G: Graph, vs: tuple[int, ...]) -> list[int]:
    """Adjacency of ``G[vs]`` relabelled to ``0..len(vs)-1``."""
    idx = {v: i for i, v in enumerate(vs)}
    out = []
    for v in vs:
        row = 0
        for u in iter_bits(G.adj[v]):
            j = idx.get(u)
            if j is not None:
                row |= 1 << j
        out.append(row)
    return out


def _edges_of(adj: list[int]) -> int:
    return sum(a.bit_count() for a in adj) // 2


def _is_cycle(adj: list[int]) -> list[int] | None:
    """Vertices in cyclic order if ``adj`` is a single cycle, else ``None``."""
    n = len(adj)
    if n < 3 or any(a.bit_count() != 2 for a in adj):
        return None
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = [u for u in iter_bits(adj[cur]) if u != prev][0]
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == n else None


def _match_building(adj: list[int]):
    n = len(adj)
    if n < 5 or _edges_of(adj) != n + 1:
        return None
    for v in range(n):
        if adj[v].bit_count() != 2:
            continue
        x, y = iter_bits(adj[v])
        if not adj[x] >> y & 1:
            continue
        rest = list(adj)
        rest[x] &= ~(1 << y)
        rest[y] &= ~(1 << x)
        cyc = _is_cycle(rest)
        if cyc is not None:
            return {"apex": v, "chord": (x, y), "cycle": cyc}
    return None


def _match_cycle(adj: list[int], min_len: int):
    if len(adj) < min_len:
        return None
    cyc = _is_cycle(adj)
    return None if cyc is None else {"cycle": cyc}


def _match_near_building(adj: list[int]):
    n = len(adj)
    if n < 5:
        return None
    for v in range(n):
        if adj[v].bit_count() != 2:
            continue
        a, b = iter_bits(adj[v])
        if not adj[a] >> b & 1:
            continue
        for w1, wj in ((a, b), (b, a)):
            # w1..w(j-1) must be an induced path starting at w1 once v and wj are gone
            keep = [u for u in range(n) if u not in (v, wj)]
            path = _induced_path_from(adj, keep, w1)
            if path is None or len(path) < 3:
                continue
            if not adj[wj] >> path[-1] & 1:
                continue
            # every other edge at wj goes to w2..w(j-2), which is allowed
            return {"labelled": [v, *path, wj]}
    return None


def _induced_path_from(adj: list[int], keep: list[int], start: int) -> list[int] | None:
    """The vertices ``keep`` in path order if they induce a path with end ``start``."""
    mask = to_mask(keep)
    if (adj[start] & mask).bit_count() != 1 and len(keep) > 1:
        return None
    order = [start]
    prev, cur = -1, start
    while len(order) < len(keep):
        nb = [u for u in iter_bits(adj[cur] & mask) if u != prev]
        if len(nb) != 1:
            return None
        prev, cur = cur, nb[0]
        order.append(cur)
    if (adj[cur] & mask).bit_count() > (1 if len(keep) > 1 else 0):
        return None
    # an induced path has exactly len-1 edges
    if sum((adj[u] & mask).bit_count() for u in keep) // 2 != len(keep) - 1:
        return None
    return order


_PATTERNS = {
    StructureKind.GEM: (5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    StructureKind.BULL: (5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]),  # nose is 4
    StructureKind.HOUSE: (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
    StructureKind.DOMINO: (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]),
    StructureKind.P4: (4, [(0, 1), (1, 2), (2, 3)]),
}


def _match_pattern(adj: list[int], kind: StructureKind, fixed: dict[int, int] | None = None):
    """Map pattern vertices onto ``adj`` exactly; ``fixed`` pins pattern->sub ids."""
    size, edges = _PATTERNS[kind]
    if len(adj) != size or _edges_of(adj) != len(edges):
        return None
    pat = [0] * size
    for a, b in edges:
        pat[a] |= 1 << b
        pat[b] |= 1 << a
    for perm in permutations(range(size)):
        if fixed and any(perm[p] != s for p, s in fixed.items()):
            continue
        if all(
            bool(pat[a] >> b & 1) == bool(adj[perm[a]] >> perm[b] & 1)
            for a in range(size)
            for b in range(a + 1, size)
        ):
            return {"map": perm}
    return None


def _check_bound(G: Graph, kind: StructureKind, bound: int) -> None:
    need = FIXED_SIZE.get(kind, G.n)
    if need > bound:
        raise OracleRefusal(f"{kind.value} search on {G.n} vertices needs subsets of size {need} > bound {bound}")


def oracle_find(
    G: Graph,
    kind: StructureKind | str,
    bound: int = DEFAULT_BOUND,
    *,
    nose: int | None = None,
    within=None,
) -> Witness | None:
    """Exhaustive search for an induced ``kind``; refuses rather than guessing.

    ``nose`` is required for bulls; ``within`` restricts the search to a
    vertex subset (used for P4s inside a ball).
    """
    kind = StructureKind(kind)
    _check_bound(G, kind, bound)
    if kind is StructureKind.SUN:
        cert = _find_sun(G)
        return None if cert is None else Witness(kind, cert.vertices, {"tips": cert.tips, "centers": cert.centers})
    pool = sorted(within) if within is not None else list(range(G.n))
    if kind is StructureKind.BULL:
        if nose is None:
            raise ValueError("bull search needs the nose vertex")
        others = [v for v in pool if v != nose]
        for rest in combinations(others, 4):
            vs = (nose, *rest)
            hit = _match_pattern(_sub_adj(G, vs), kind, fixed={4: 0})
            if hit:
                perm = hit["map"]
                return Witness(kind, tuple(sorted(vs)), {"nose": nose, "path": tuple(vs[perm[i]] for i in range(4))})
        return None
    if kind in _PATTERNS:
        for vs in combinations(pool, FIXED_SIZE[kind]):
            hit = _match_pattern(_sub_adj(G, vs), kind)
            if hit:
                perm = hit["map"]
                return Witness(kind, vs, {"map": tuple(vs[p] for p in perm)})
        return None
    min_size = {StructureKind.BUILDING: 5, StructureKind.HOLE: 5, StructureKind.CYCLE: 4, StructureKind.NEAR_BUILDING: 5}[kind]
    for size in range(min_size, len(pool) + 1):
        for vs in combinations(pool, size):
            sub = _sub_adj(G, vs)
            if kind is StructureKind.BUILDING:
                hit = _match_building(sub)
                if hit:
                    return Witness(kind, vs, {"apex": vs[hit["apex"]], "chord": tuple(sorted(vs[c] for c in hit["chord"])), "cycle": tuple(vs[c] for c in hit["cycle"])})
            elif kind is StructureKind.NEAR_BUILDING:
                hit = _match_near_building(sub)
                if hit:
                    return Witness(kind, vs, {"labelled": tuple(vs[c] for c in hit["labelled"])})
            else:
                hit = _match_cycle(sub, min_size)
                if hit:
                    return Witness(kind, vs, {"cycle": tuple(vs[c] for c in hit["cycle"])})
    return None


def oracle_has_building(G: Graph, bound: int = DEFAULT_BOUND) -> bool:
    """Subset DP on edge counts, then the building predicate on candidates."""
    if G.n > bound:
        raise OracleRefusal(f"building search on {G.n} vertices exceeds bound {bound}")
    n = G.n
    adj = G.adj
    edges = [0] * (1 << n)
    for S in range(1, 1 << n):
        low = S & -S
        v = low.bit_length() - 1
        rest = S ^ low
        edges[S] = edges[rest] + (adj[v] & rest).bit_count()
        size = S.bit_count()
        if size >= 5 and edges[S] == size + 1:
            vs = tuple(iter_bits(S))
            if _match_building(_sub_adj(G, vs)):
                return True
    return False


def _cliques(adj, n: int, min_size: int):
    """All cliques of size >= ``min_size`` (not just maximal ones)."""

    def grow(clique: list[int], cand: int):
        if len(clique) >= min_size:
            yield tuple(clique)
        for v in iter_bits(cand):
            yield from grow(clique + [v], cand & adj[v] & ~((2 << v) - 1))

    for v in range(n):
        yield from grow([v], adj[v] & ~((2 << v) - 1))


def _find_sun(G: Graph) -> SunCertificate | None:
    """Search center cliques, then a cyclic tip assignment with stable tips."""
    adj = G.adj
    n = G.n
    for clique in _cliques(adj, n, 3):
        k = len(clique)
        cmask = to_mask(clique)
        # candidate tips for each center pair: outside, seeing exactly that pair of the clique
        cand: dict[tuple[int, int], list[int]] = {}
        for a, b in combinations(clique, 2):
            want = 1 << a | 1 << b
            ts = [t for t in range(n) if not cmask >> t & 1 and adj[t] & cmask == want]
            if ts:
                cand[(a, b)] = ts
        if len(cand) < k:
            continue
        found = _sun_cycle(adj, clique, cand)
        if found is not None:
            return found
    return None


def _sun_cycle(adj, clique, cand):
    k = len(clique)
    first = clique[0]

    def pair(a, b):
        return (a, b) if a < b else (b, a)

    def extend(order: list[int], tips: list[int], used_tips: int):
        if len(order) == k:
            ts = cand.get(pair(order[-1], first), [])
            for t in ts:
                if not used_tips & (adj[t] | 1 << t):
                    return SunCertificate(tuple(tips + [t]), tuple(order))
            return None
        for c in clique:
            if c in order:
                continue
            for t in cand.get(pair(order[-1], c), []):
                if used_tips & (adj[t] | 1 << t):
                    continue
                res = extend(order + [c], tips + [t], used_tips | 1 << t)
                if res is not None:
                    return res
        return None

    return extend([first], [], 0)


def oracle_has_sun(G: Graph, bound: int = DEFAULT_BOUND) -> bool:
    _check_bound(G, StructureKind.SUN, bound)
    return _find_sun(G) is not None


def is_sun_graph(G: Graph) -> SunCertificate | None:
    """Certificate iff all of ``G`` is a k-sun (read off tips by degree)."""
    n = G.n
    if n < 6 or n % 2:
        return None
    adj = G.adj
    k = n // 2
    tips = [v for v in range(n) if adj[v].bit_count() == 2]
    centers = [v for v in range(n) if v not in tips]
    if len(tips) != k or len(centers) != k:
        return None
    cmask = to_mask(centers)
    for c in centers:
        if (adj[c] & cmask).bit_count() != k - 1:
            return None
    for t in tips:
        if adj[t] & ~cmask:
            return None
    # every center pair is hit by at most one tip and the pairs form one k-cycle
    pairs = {}
    for t in tips:
        a, b = iter_bits(adj[t])
        pairs.setdefault(a, []).append((b, t))
        pairs.setdefault(b, []).append((a, t))
    if any(len(v) != 2 for v in pairs.values()) or len(pairs) != k:
        return None
    start = centers[0]
    cur, t = pairs[start][0]
    order, tip_order = [start], [t]
    while cur != start:
        order.append(cur)
        cur, t = next(o for o in pairs[cur] if o[1] != tip_order[-1])
        tip_order.append(t)
    if len(order) != k:
        return None
    return SunCertificate(tuple(tip_order), tuple(order))


def brute_force_has_sun(G: Graph, max_n: int = 10) -> bool:
    """Raw even-subset enumeration; only for cross-checking :func:`oracle_has_sun`."""
    if G.n > max_n:
        raise OracleRefusal(f"raw sun enumeration refuses n={G.n} > {max_n}")
    for size in range(6, G.n + 1, 2):
        for vs in combinations(range(G.n), size):
            sub = _sub_adj(G, vs)
            if is_sun_graph(Graph(len(sub), tuple(sub))) is not None:
                return True
    return False
