"""Named fixtures, seeded graph families and the small-graph catalog."""

from __future__ import annotations

import random
from functools import lru_cache

from .buildings import find_building, find_gem
from .graph import Graph, from_edges, is_connected, iter_bits, mask_is_clique, relabel
from .orderings import is_chordal, is_strongly_chordal


class BudgetExhausted(RuntimeError):
    def __init__(self, family: str, attempts: int):
        super().__init__(f"{family}: no acceptable graph after {attempts} attempts")
        self.attempts = attempts


# --- fixtures ---------------------------------------------------------------


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_power(n: int, power: int) -> Graph:
    """``(C_n)^power``: ``i`` sees ``i +- 1 .. i +- power`` (mod ``n``)."""
    return from_edges(n, [(i, (i + d) % n) for i in range(n) for d in range(1, power + 1)])


def sun(k: int) -> Graph:
    """k-sun with tips ``0..k-1`` and centers ``k..2k-1``; tip ``i`` sees centers ``k+i`` and ``k+(i+1)%k``."""
    edges = [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        edges += [(i, k + i), (i, k + (i + 1) % k)]
    return from_edges(2 * k, edges)


def house() -> Graph:
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def domino() -> Graph:
    # a..f = 0..5 with edges ab bc cd de ef fa be
    return from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])


def gem() -> Graph:
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])


def bull() -> Graph:
    """P4 ``0-1-2-3`` plus nose ``4`` seeing ``1`` and ``2``."""
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)])


def near_building(j: int = 4, extra: tuple[int, ...] = ()) -> Graph:
    """``v = 0``, ``w1..wj = 1..j``; ``extra`` lists optional ``i`` for edges ``wj wi``."""
    edges = [(0, 1), (0, j), (1, j)] + [(i, i + 1) for i in range(1, j)]
    edges += [(j, i) for i in extra]
    return from_edges(j + 1, edges)


def d2_contrast() -> Graph:
    """P4 ``a b c d`` = ``0 1 2 3`` plus ``v = 4`` adjacent to ``a`` and ``c``."""
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 2)])


def star(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# --- random families ------------------------------------------------------


def _rng(seed) -> random.Random:
    return random.Random(seed)


def random_gnp(n: int, p: float, seed) -> Graph:
    rng = _rng(seed)
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_tree(n: int, seed) -> Graph:
    rng = _rng(seed)
    return from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def random_chordal(n: int, seed, density: float = 0.5) -> Graph:
    """Chordal graph built backwards along a random perfect elimination ordering.

    Each new vertex attaches to a random subset of ``{u} + right(u)`` for a
    random earlier-placed ``u``; that set is a clique, so the ordering stays
    a PEO.  Every chordal graph with this PEO is reachable.
    """
    rng = _rng(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    adj = [0] * n
    right = {}
    placed: list[int] = []
    for v in reversed(perm):
        nb = 0
        if placed:
            u = rng.choice(placed)
            pool = [u] + list(iter_bits(right[u]))
            nb = sum(1 << w for w in pool if w == u or rng.random() < density)
        right[v] = nb
        adj[v] = nb
        for w in iter_bits(nb):
            adj[w] |= 1 << v
        placed.append(v)
    return Graph(n, tuple(adj))


def random_strongly_chordal(n: int, seed, density: float = 0.6) -> Graph:
    """Strongly chordal graph built backwards along a simple elimination ordering.

    The new vertex ``v`` attaches to a clique ``S`` whose closed
    neighbourhoods are nested, so ``v`` is simple when placed and earlier
    vertices never see it.
    """
    rng = _rng(seed)
    adj = [0] * n
    order = list(range(n))
    rng.shuffle(order)
    placed: list[int] = []
    for v in reversed(order):
        S = 0
        if placed:
            u = rng.choice(placed)
            S = 1 << u
            cands = list(iter_bits(adj[u]))
            rng.shuffle(cands)
            for w in cands:
                if rng.random() >= density:
                    continue
                trial = S | 1 << w
                if mask_is_clique(adj, trial) and _nested(adj, trial):
                    S = trial
        adj[v] = S
        for w in iter_bits(S):
            adj[w] |= 1 << v
        placed.append(v)
    return Graph(n, tuple(adj))


def _nested(adj, S: int) -> bool:
    closed = sorted((adj[u] | 1 << u for u in iter_bits(S)), key=int.bit_count)
    return all(a & ~b == 0 for a, b in zip(closed, closed[1:]))


def random_building_free(n: int, seed, p: float = 0.4, budget: int = 200) -> Graph:
    """Grow one vertex at a time; a growth step that creates a building is redrawn."""
    return _grow(n, seed, p, budget, lambda G: find_building(G) is None, "random-building-free")


def sparse_building_free(n: int, seed, local: float = 0.5, budget: int = 200) -> Graph:
    """Building-free growth where each new vertex joins a random anchor and part of its neighbourhood.

    Stays sparse (a few edges per vertex) and usually keeps holes, so the
    result is rarely chordal.
    """
    return _grow(n, seed, 0.0, budget, lambda G: find_building(G) is None, "sparse-building-free", local=local)


def random_building_gem_free(n: int, seed, p: float = 0.4, budget: int = 200) -> Graph:
    return _grow(
        n, seed, p, budget, lambda G: find_building(G) is None and find_gem(G) is None, "random-building-gem-free"
    )


def _grow(
    n: int, seed, p: float, budget: int, ok, family: str, start: Graph | None = None, local: float = 0.0
) -> Graph:
    rng = _rng(seed)
    adj = list(start.adj) if start is not None else []
    attempts = 0
    while len(adj) < n:
        v = len(adj)
        nb = sum(1 << u for u in range(v) if rng.random() < p)
        if local and v:
            # attach near a random anchor too; purely global draws rarely survive at larger v
            u = rng.randrange(v)
            nb |= 1 << u | sum(1 << w for w in iter_bits(adj[u]) if rng.random() < local)
        trial = [a | (1 << v if nb >> u & 1 else 0) for u, a in enumerate(adj)] + [nb]
        G = Graph(v + 1, tuple(trial))
        attempts += 1
        if ok(G):
            adj = trial
        elif attempts > budget * n:
            raise BudgetExhausted(family, attempts)
    return Graph(n, tuple(adj))


def sun_plus_noise(k: int, n: int, seed, p: float = 0.05, budget: int = 200, shuffle: bool = True) -> Graph:
    """A k-sun grown to ``n`` vertices without creating a building.

    Each new vertex sees a random anchor, about half the anchor's neighbours
    and, with probability ``p``, any other vertex.  With ``shuffle`` the ids
    are permuted so the planted sun is not simply ``0..2k-1``.
    """
    G = _grow(n, seed, p, budget, lambda G: find_building(G) is None, "k-sun-plus-noise", start=sun(k), local=0.5)
    if shuffle:
        perm = list(range(n))
        _rng(f"perm-{seed}").shuffle(perm)
        G = relabel(G, perm)
    return G


FAMILIES = (
    "random-gnp",
    "random-building-free",
    "random-chordal",
    "random-strongly-chordal",
    "random-building-gem-free",
    "sparse-building-free",
    "k-sun",
    "k-sun-plus-noise",
    "cycle",
    "cycle-power",
)


def generate(family: str, n: int, seed=0, **kw) -> Graph:
    """Seeded graph from a named family, certified to belong to it.

    ``k-sun`` takes ``n`` as ``k``; ``cycle-power`` takes ``power`` (default 2);
    ``k-sun-plus-noise`` takes ``k`` (default 3).
    """
    if family == "random-gnp":
        return random_gnp(n, kw.get("p", 0.3), seed)
    if family == "random-building-free":
        return random_building_free(n, seed, kw.get("p", 0.4))
    if family == "random-chordal":
        G = random_chordal(n, seed, kw.get("density", 0.5))
        assert is_chordal(G)
        return G
    if family == "random-strongly-chordal":
        G = random_strongly_chordal(n, seed, kw.get("density", 0.6))
        assert is_strongly_chordal(G)
        return G
    if family == "random-building-gem-free":
        return random_building_gem_free(n, seed, kw.get("p", 0.4))
    if family == "sparse-building-free":
        return sparse_building_free(n, seed, kw.get("local", 0.5))
    if family == "k-sun":
        return sun(n)
    if family == "k-sun-plus-noise":
        return sun_plus_noise(kw.get("k", 3), n, seed, kw.get("p", 0.05))
    if family == "cycle":
        return cycle(n)
    if family == "cycle-power":
        return cycle_power(n, kw.get("power", 2))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


# --- catalog ----------------------------------------------------------------


@lru_cache(maxsize=None)
def catalog(max_n: int = 7, connected: bool = True) -> tuple[Graph, ...]:
    """Every graph on 1..max_n vertices up to isomorphism (``max_n <= 8``).

    Sizes up to 7 come from the graph atlas shipped with networkx.  Size 8
    extends each 7-vertex graph by one vertex in all 128 ways and keeps one
    graph per nauty canonical form (needs the ``catalog`` extra).
    """
    if max_n > 8:
        raise ValueError("the catalog only covers graphs on at most 8 vertices")
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for H in graph_atlas_g():
        n = H.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        out.append(from_edges(n, H.edges()))
    if max_n == 8:
        out += _eight_vertex_graphs([G for G in out if G.n == 7])
    if connected:
        out = [G for G in out if is_connected(G)]
    return tuple(out)


def _eight_vertex_graphs(sevens: list[Graph]) -> list[Graph]:
    try:
        import pynauty
    except ImportError:
        raise ImportError("catalog(8) needs pynauty: pip install 'artifact[catalog]'") from None
    seen: dict[bytes, Graph] = {}
    for H in sevens:
        for nb in range(1 << 7):
            adj = [a | (1 << 7 if nb >> u & 1 else 0) for u, a in enumerate(H.adj)] + [nb]
            g = pynauty.Graph(8, adjacency_dict={v: list(iter_bits(adj[v])) for v in range(8)})
            seen.setdefault(pynauty.certificate(g), Graph(8, tuple(adj)))
    return list(seen.values())
