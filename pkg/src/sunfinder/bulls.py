"""Bull-nose elimination schemes and the distance-two P4 test.

``H_v`` below is the subgraph induced by ``v`` and the vertices to its right
in an ordering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .buildings import bull_with_nose_in
from .certificates import NoseBull
from .graph import Graph, iter_bits
from .orderings import Ordering, as_sequence


@dataclass(frozen=True)
class SchemeReport:
    ordering: tuple[int, ...]
    violations: list[tuple[int, object]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.holds


def check_lbfs_nose_free(G: Graph, order: Iterable[int], first_only: bool = False) -> SchemeReport:
    """List every ``v`` that is the nose of a bull inside ``H_v``.

    With ``first_only`` the scan stops at the first violation.
    """
    seq = as_sequence(G, order)
    alive = G.all_mask
    violations: list[tuple[int, NoseBull]] = []
    for v in seq:
        bull = bull_with_nose_in(G.adj, alive, v)
        if bull is not None:
            violations.append((v, bull))
            if first_only:
                break
        alive &= ~(1 << v)
    return SchemeReport(seq, violations)


def bull_free_elimination_order(G: Graph) -> Ordering | None:
    """Greedily remove a vertex that is not a bull nose in what remains.

    The lowest eligible id is taken each round.  Returns ``None`` as soon as
    every remaining vertex is the nose of some bull.
    """
    alive = G.all_mask
    seq = []
    while alive:
        for v in iter_bits(alive):
            if bull_with_nose_in(G.adj, alive, v) is None:
                seq.append(v)
                alive &= ~(1 << v)
                break
        else:
            return None
    return Ordering(tuple(seq), "candidate")


def ball2(adj, alive: int, v: int) -> int:
    """Vertices within distance two of ``v`` inside ``alive`` (``v`` included)."""
    near = adj[v] & alive
    reach = near | 1 << v
    for u in iter_bits(near):
        reach |= adj[u] & alive
    return reach


def p4_in(adj, region: int) -> tuple[int, int, int, int] | None:
    """An induced P4 ``a-b-c-d`` with all four vertices in ``region``."""
    for b in iter_bits(region):
        for c in iter_bits(adj[b] & region):
            a_side = adj[b] & region & ~adj[c] & ~(1 << c)
            d_side = adj[c] & region & ~adj[b] & ~(1 << b)
            for a in iter_bits(a_side):
                rest = d_side & ~adj[a] & ~(1 << a)
                if rest:
                    return a, b, c, (rest & -rest).bit_length() - 1
    return None


def d2_p4_check(G: Graph, order: Iterable[int]) -> SchemeReport:
    """List every ``v`` whose distance-two ball in ``H_v`` contains an induced P4."""
    seq = as_sequence(G, order)
    alive = G.all_mask
    violations: list[tuple[int, tuple[int, int, int, int]]] = []
    for v in seq:
        p4 = p4_in(G.adj, ball2(G.adj, alive, v))
        if p4 is not None:
            violations.append((v, p4))
        alive &= ~(1 << v)
    return SchemeReport(seq, violations)
