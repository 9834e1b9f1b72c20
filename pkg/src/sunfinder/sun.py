"""Sun detection in building-free graphs.

The pipeline: for every vertex ``x`` and edge ``yz`` inside ``N(x)``, delete
the other neighbours of ``x`` and ask whether ``x`` is the tip of a
sunflower.  That question is answered by sorting the non-neighbours of ``x``
by how many neighbours of ``x`` they see, completing them to a strongly
chordal graph along that order, and testing whether ``x`` lies in a 3-sun of
the completed graph via a perfect-elimination check after adding red edges.

Internally every routine works on ``(adj, alive)``: the full adjacency
bitsets plus a bitmask of the vertices still present, which avoids building
a relabelled graph per branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .buildings import find_building
from .certificates import (
    BuildingCertificate,
    ContractError,
    SunCertificate,
    SunflowerCertificate,
    validate_sun,
    validate_sunflower,
)
from .graph import Graph, induced_mask, iter_bits, mask_is_clique, to_mask
from .orderings import _peo_report, is_chordal, is_strong_elimination


class BuildingPresent(ValueError):
    """The input was required to be building-free but is not."""

    def __init__(self, certificate: BuildingCertificate):
        super().__init__(f"graph contains a building: {certificate}")
        self.certificate = certificate


@dataclass
class TipSearchState:
    """Everything one tip-of-sunflower run computed, for inspection and audits."""

    x: int
    alive: int
    order: tuple[int, ...]
    nvals: dict[int, int]
    H: tuple[int, ...]
    added: tuple[tuple[int, int], ...]
    red_edges: tuple[tuple[int, int], ...] = ()
    in_3_sun: bool = False

    @property
    def neighborhood(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.H[self.x] & self.alive))


@dataclass
class SunAudit:
    """Collects per-branch checks of the lemma-level invariants.

    Pass one to :func:`find_sun` to have every executed branch verified:
    the completed graph is chordal with the expected elimination scheme, the
    completion order is a strong elimination ordering, and the 3-sun answer
    agrees with both the red-edge domination test and the first-neighbour
    test.
    """

    branches: int = 0
    violations: list[str] = field(default_factory=list)
    check_dominance: bool = True

    def fail(self, what: str, state: TipSearchState) -> None:
        self.violations.append(f"{what} (x={state.x}, order={state.order})")


@dataclass(frozen=True)
class SunResult:
    found: bool
    certificate: SunCertificate | None = None
    branch: tuple[int, int, int] | None = None  # (x, y, z) of the first successful branch

    def __bool__(self) -> bool:
        return self.found

    def __iter__(self):
        return iter((self.found, self.certificate))


def n_dominates(G: Graph, X: Iterable[int], u: int, v: int) -> bool:
    """True iff ``N(v) & X`` is contained in ``N[u] & X``."""
    G._check(u)
    G._check(v)
    xm = to_mask(X)
    return _dominates(G.adj, xm, u, v)


def _dominates(adj, xm: int, u: int, v: int) -> bool:
    return adj[v] & xm & ~(adj[u] | 1 << u) == 0


def _suffix_masks(order: Sequence[int]) -> list[int]:
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | 1 << order[i]
    return suffix


def _scc(adj: list[int], order: Sequence[int]) -> list[tuple[int, int]]:
    """Strongly chordal completion in place along ``order``; returns added edges.

    Iteration ``i`` first turns the right neighbourhood ``A`` of ``y_i`` into
    a clique, then for each member of ``A`` (in order) hands its old right
    neighbours to every later member of ``A``.  "Old" means adjacency before
    iteration ``i`` started.
    """
    suffix = _suffix_masks(order)
    added = []
    for i, yi in enumerate(order):
        later = suffix[i + 1]
        A = adj[yi] & later
        if not A:
            continue
        members = [v for v in order[i + 1:] if A >> v & 1]
        prev = {v: adj[v] for v in members}
        for a in members:
            new = A & ~adj[a] & ~(1 << a)
            if new:
                adj[a] |= new
                for b in iter_bits(new):
                    adj[b] |= 1 << a
                    added.append((min(a, b), max(a, b)))
        inherited = 0
        for s, ys in enumerate(members):
            if s:
                new = inherited & ~adj[ys] & ~(1 << ys)
                if new:
                    adj[ys] |= new
                    for r in iter_bits(new):
                        adj[r] |= 1 << ys
                        added.append((min(r, ys), max(r, ys)))
            inherited |= prev[ys] & later
    return added


def scc_completion(Gs: Graph, order: Iterable[int]) -> Graph:
    """Add edges so that ``order`` becomes a strong elimination ordering."""
    seq = tuple(order)
    if sorted(seq) != list(range(Gs.n)):
        raise ContractError(f"order is not a permutation of the vertices: {seq}")
    adj = list(Gs.adj)
    _scc(adj, seq)
    return Graph(Gs.n, tuple(adj))


def _red_edges(H: Sequence[int], order: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs ``[y_i, y_p]`` with ``y_i y_q y_p`` an induced P3 for some ``i < p < q``."""
    suffix = _suffix_masks(order)
    pos = {v: i for i, v in enumerate(order)}
    red = []
    for i, yi in enumerate(order):
        later = suffix[i + 1]
        reach = 0
        for q in iter_bits(H[yi] & later):
            between = later & ~suffix[pos[q]]
            reach |= H[q] & between
        reach &= ~H[yi]
        for p in iter_bits(reach):
            red.append((yi, p))
    return red


def _in_3_sun_core(H: Sequence[int], alive: int, x: int, order: Sequence[int]):
    red = _red_edges(H, order)
    Hp = list(H)
    for a, b in red:
        Hp[a] |= 1 << b
        Hp[b] |= 1 << a
    nx_ = sorted(iter_bits(H[x] & alive))
    report = _peo_report([h & alive for h in Hp], list(order) + nx_ + [x])
    return not report.holds, red, Hp


def in_3_sun(H: Graph, x: int, order: Iterable[int]) -> bool:
    """Decide whether ``x`` lies in a 3-sun of ``H``.

    ``order`` lists ``M(x)`` and must satisfy the three input conditions
    (strong elimination ordering of ``H[M(x)]``, ascending in the number of
    neighbours of ``x`` seen, and neighbourhood inclusion within ``N(x)``
    along edges); ``H`` must be chordal with ``x`` simplicial.  Violations
    raise :class:`ContractError`.
    """
    H._check(x)
    seq = tuple(order)
    _check_in_3_sun_input(H, x, seq)
    found, _, _ = _in_3_sun_core(H.adj, H.all_mask, x, seq)
    return found


def _check_in_3_sun_input(H: Graph, x: int, seq: tuple[int, ...]) -> None:
    adj = H.adj
    m_mask = H.all_mask & ~adj[x] & ~(1 << x)
    if to_mask(seq) != m_mask or len(seq) != m_mask.bit_count():
        raise ContractError("order must list exactly the non-neighbours of x")
    if not is_chordal(H):
        raise ContractError("H is not chordal")
    if not mask_is_clique(adj, adj[x]):
        raise ContractError(f"{x} is not simplicial in H")
    sub, old = induced_mask(adj, m_mask)
    index = {v: i for i, v in enumerate(old)}
    if not is_strong_elimination(sub, [index[v] for v in seq]):
        raise ContractError("order is not a strong elimination ordering of H[M(x)]")
    nx_ = adj[x]
    counts = [(adj[v] & nx_).bit_count() for v in seq]
    if counts != sorted(counts):
        raise ContractError("order is not ascending in |N(y) & N(x)|")
    for i, yi in enumerate(seq):
        for yj in seq[i + 1:]:
            if adj[yi] >> yj & 1 and adj[yi] & nx_ & ~adj[yj]:
                raise ContractError(f"N({yi}) & N(x) not inside N({yj}) & N(x) along edge")


def _tip_of_sunflower(adj: Sequence[int], alive: int, x: int, audit: SunAudit | None = None) -> TipSearchState:
    nx_ = adj[x] & alive
    m_mask = alive & ~nx_ & ~(1 << x)
    nvals = {y: (adj[y] & nx_).bit_count() for y in iter_bits(m_mask)}
    order = tuple(sorted(nvals, key=lambda y: (nvals[y], y)))
    # Completion only ever sees G[M(x)]; edges to N(x) are restored afterwards.
    work = [a & m_mask for a in adj]
    added = _scc(work, order)
    H = list(adj)
    for a, b in added:
        H[a] |= 1 << b
        H[b] |= 1 << a
    H = tuple(h & alive for h in H)
    found, red, Hp = _in_3_sun_core(H, alive, x, order)
    state = TipSearchState(x, alive, order, nvals, H, tuple(added), tuple(red), found)
    if audit is not None:
        _audit_branch(audit, state, Hp)
    return state


def tip_of_sunflower(G: Graph, x: int) -> tuple[bool, TipSearchState]:
    """Whether simplicial ``x`` is the tip of a sunflower in building-free ``G``."""
    G._check(x)
    if not mask_is_clique(G.adj, G.adj[x]):
        raise ContractError(f"vertex {x} is not simplicial")
    state = _tip_of_sunflower(G.adj, G.all_mask, x)
    return state.in_3_sun, state


def reddom_witness(state: TipSearchState) -> tuple[int, int] | None:
    """A red edge ``(y_i, y_j)``, ``i < j``, where ``y_j`` does not dominate ``y_i`` on ``N(x)``."""
    nx_ = state.H[state.x] & state.alive
    for yi, yj in state.red_edges:
        if not _dominates(state.H, nx_, yj, yi):
            return yi, yj
    return None


def corollary_witness(state: TipSearchState, Hp: Sequence[int] | None = None) -> tuple[int, int, int] | None:
    """``(y_i, y_j, w)``: ``y_j`` is the first right neighbour of ``y_i`` in the
    red-edge graph and ``w`` in ``N(x)`` is seen by ``y_i`` but not ``y_j``."""
    if Hp is None:
        Hp = list(state.H)
        for a, b in state.red_edges:
            Hp[a] |= 1 << b
            Hp[b] |= 1 << a
    nx_ = state.H[state.x] & state.alive
    order = state.order
    for i, yi in enumerate(order):
        for yj in order[i + 1:]:
            if Hp[yi] >> yj & 1:
                gap = Hp[yi] & nx_ & ~Hp[yj]
                if gap:
                    return yi, yj, (gap & -gap).bit_length() - 1
                break
    return None


def _audit_branch(audit: SunAudit, state: TipSearchState, Hp: Sequence[int]) -> None:
    audit.branches += 1
    H, alive, x, order = state.H, state.alive, state.x, state.order
    nx_ = H[x] & alive
    scheme = list(order) + sorted(iter_bits(nx_)) + [x]
    if not _peo_report(H, scheme).holds:
        audit.fail("completed graph fails the y..x..x perfect elimination scheme", state)
    m_mask = to_mask(order)
    sub, old = induced_mask(H, m_mask)
    index = {v: i for i, v in enumerate(old)}
    if not is_strong_elimination(sub, [index[v] for v in order]):
        audit.fail("completion order is not a strong elimination ordering", state)
    if any(not (m_mask >> a & 1 and m_mask >> b & 1) for a, b in state.added):
        audit.fail("completion added an edge outside M(x)", state)
    if audit.check_dominance:
        for i, yi in enumerate(order):
            for yj in order[i + 1:]:
                if H[yi] >> yj & 1 and H[yi] & nx_ & ~H[yj]:
                    audit.fail(f"edge {yi}-{yj} breaks N(x) inclusion", state)
    if (reddom_witness(state) is not None) != state.in_3_sun:
        audit.fail("red-edge domination test disagrees with the 3-sun answer", state)
    if (corollary_witness(state, Hp) is not None) != state.in_3_sun:
        audit.fail("first-neighbour test disagrees with the 3-sun answer", state)


def _branches(adj: Sequence[int], alive: int):
    for x in iter_bits(alive):
        nx_ = adj[x] & alive
        for y in iter_bits(nx_):
            for z in iter_bits(nx_ & adj[y] & ~((2 << y) - 1)):
                yield x, y, z


def _branch_alive(adj: Sequence[int], alive: int, x: int, y: int, z: int) -> int:
    return alive & ~(adj[x] & ~(1 << y | 1 << z))


def _branch_true(adj, alive, branch, audit=None) -> bool:
    x, y, z = branch
    return _tip_of_sunflower(adj, _branch_alive(adj, alive, x, y, z), x, audit).in_3_sun


def _decide(adj, alive: int, audit: SunAudit | None = None, hint=None) -> tuple[int, int, int] | None:
    if hint is not None:
        x, y, z = hint
        if alive >> x & 1 and alive >> y & 1 and alive >> z & 1 and _branch_true(adj, alive, hint, audit):
            return hint
    for branch in _branches(adj, alive):
        if _branch_true(adj, alive, branch, audit):
            return branch
    return None


def find_sun(G: Graph, *, precheck: bool = True, certify: bool = True, audit: SunAudit | None = None) -> SunResult:
    """Decide whether building-free ``G`` contains a sun.

    With ``precheck`` (the default) a building raises :class:`BuildingPresent`
    carrying its certificate; without it the answer on graphs with buildings
    is meaningless.  Vertices are scanned in ascending order and, for each,
    the edges ``yz`` of ``N(x)`` in ascending order; the first successful
    branch wins.  With ``certify`` a :class:`SunCertificate` is extracted.
    """
    if precheck:
        building = find_building(G)
        if building is not None:
            raise BuildingPresent(building)
    branch = _decide(G.adj, G.all_mask, audit)
    if branch is None:
        return SunResult(False)
    cert = _extract(G, branch) if certify else None
    return SunResult(True, cert, branch)


def _read_sun(adj: Sequence[int], S: int) -> SunCertificate | None:
    tips = [v for v in iter_bits(S) if (adj[v] & S).bit_count() == 2]
    centers_mask = S & ~to_mask(tips)
    k = len(tips)
    if k < 3 or centers_mask.bit_count() != k:
        return None
    # walk the cycle tip -> center -> tip ...
    first = tips[0]
    c0, c1 = iter_bits(adj[first] & S)
    ordered_tips = [first]
    centers = [c0]
    cur_center = c1
    used = {first}
    while len(ordered_tips) < k:
        centers.append(cur_center)
        nxt = [t for t in tips if t not in used and adj[t] >> cur_center & 1]
        if len(nxt) != 1:
            return None
        t = nxt[0]
        used.add(t)
        ordered_tips.append(t)
        others = [c for c in iter_bits(adj[t] & S) if c != cur_center]
        if len(others) != 1:
            return None
        cur_center = others[0]
    if cur_center != c0:
        return None
    return SunCertificate(tuple(ordered_tips), tuple(centers))


def _extract(G: Graph, branch: tuple[int, int, int] | None = None) -> SunCertificate:
    adj = G.adj
    alive = G.all_mask
    hint = branch
    for w in range(G.n - 1, -1, -1):
        trial = alive & ~(1 << w)
        hit = _decide(adj, trial, hint=hint)
        if hit is not None:
            alive, hint = trial, hit
    cert = _read_sun(adj, alive)
    if cert is None or validate_sun(G, cert):
        raise ContractError(f"deletion fixpoint {sorted(iter_bits(alive))} is not a sun")
    return cert


def extract_sun(G: Graph) -> SunCertificate:
    """Certificate for a sun in building-free ``G`` by vertex-deletion self-reduction.

    Vertices are tried for deletion in descending id order and deleted
    whenever the graph still contains a sun.  The survivors are a minimal
    sun-containing set, hence exactly a sun.  Raises :class:`ContractError`
    if ``G`` has no sun.
    """
    branch = _decide(G.adj, G.all_mask)
    if branch is None:
        raise ContractError("graph contains no sun")
    return _extract(G, branch)


# --- sunflower shrinking -------------------------------------------------


def _sees(adj, u: int, v: int) -> bool:
    return bool(adj[u] >> v & 1)


def _rotate(S: SunflowerCertificate, r: int) -> SunflowerCertificate:
    """Rotate so that petal ``r`` becomes the last petal."""
    k = S.k
    shift = (r + 1) % k
    return SunflowerCertificate(S.centers[shift:] + S.centers[:shift], S.petals[shift:] + S.petals[:shift])


def _reflect(S: SunflowerCertificate) -> SunflowerCertificate:
    """Mirror the cyclic order, keeping the last petal last."""
    k = S.k
    centers = tuple(reversed(S.centers))
    petals = tuple(tuple(reversed(S.petals[k - 2 - j])) for j in range(k - 1)) + (tuple(reversed(S.petals[k - 1])),)
    return SunflowerCertificate(centers, petals)


def _shrink_once(adj, S: SunflowerCertificate) -> SunflowerCertificate | None:
    """One rewrite step for the tip on the last petal; ``None`` if no rule applies.

    Centers are ``c[0..k-1]``; the tip ``x`` sits on ``c[k-1] x c[0]`` and
    ``c[0]`` sees ``c[k-1]``.  Every rule concerns a center ``c[i]``
    (``0 < i < k-1``) that misses ``c[k-1]``.
    """
    c, P, k = S.centers, S.petals, S.k
    last = c[k - 1]
    for i in range(1, k - 1):
        ci = c[i]
        if _sees(adj, ci, last):
            continue
        seen = [j for j in range(k) if j != i and _sees(adj, ci, c[j])]
        if not seen:
            # c[i] becomes a petal vertex of the merged petal
            merged = P[i - 1] + P[i][1:]
            return SunflowerCertificate(c[:i] + c[i + 1:], P[: i - 1] + (merged,) + P[i + 1:])
        later = [j for j in seen if j > i]
        if not later:
            t = seen[0]
            if t == 0 and i == k - 2:
                raise _BuildingHere(P[k - 1][1:2] + (c[0],) + P[k - 2])
            return SunflowerCertificate(c[: t + 1] + c[i + 1:], P[:t] + ((c[t],) + P[i],) + P[i + 1:])
        t = max(later)
        earlier = [j for j in seen if j < i]
        if not earlier:
            return SunflowerCertificate(c[:i] + c[t:], P[: i - 1] + (P[i - 1] + (c[t],),) + P[t:])
        r = earlier[0]
        return SunflowerCertificate(c[: r + 1] + c[t:], P[:r] + ((c[r], ci, c[t]),) + P[t:])
    return None


class _BuildingHere(Exception):
    def __init__(self, vertices):
        super().__init__(vertices)
        self.vertices = tuple(vertices)


def _contract_with_building(G: Graph, vertices, why: str) -> ContractError:
    sub, old = induced_mask(G.adj, to_mask(vertices))
    building = find_building(sub)
    if building is not None:
        building = BuildingCertificate(
            tuple(old[v] for v in building.hole), tuple(sorted(old[v] for v in building.chord)), old[building.apex]
        )
    err = ContractError(f"{why}; building: {building}")
    err.building = building
    return err


def sunflower_to_sun(G: Graph, S: SunflowerCertificate, tip_petal: int) -> SunCertificate:
    """Shrink a sunflower with a simplicial two-edge petal to a sun.

    Follows the constructive argument: with the tip on the last petal,
    centers missing an end center are merged away or short-cut through a
    neighbouring center, each step giving a smaller sunflower that keeps the
    tip.  Once no rule fires in either orientation every center sees both
    end centers, consecutive centers are adjacent and every petal is a
    single tip; repeating with each tip in turn forces all centers into a
    clique.  Any invalid intermediate sunflower, or a structure the argument
    rules out, raises :class:`ContractError` (a building in ``G``).
    """
    problems = validate_sunflower(G, S)
    if problems:
        raise ContractError(f"not a sunflower: {problems}")
    if not 0 <= tip_petal < S.k:
        raise ContractError(f"no petal {tip_petal}")
    if len(S.petals[tip_petal]) != 3:
        raise ContractError("tip petal must have exactly two edges")
    a, b = S.petals[tip_petal][0], S.petals[tip_petal][-1]
    if not _sees(G.adj, a, b):
        raise ContractError("tip is not simplicial in the sunflower")
    settled, changed = _settle(G, _rotate(S, tip_petal))
    # keep the caller's labelling when the input already was a sun
    return _as_sun(G, settled if changed else S)


def _settle(G: Graph, S: SunflowerCertificate) -> tuple[SunflowerCertificate, bool]:
    """Apply rewrites until none fires for any tip; report whether anything changed."""
    adj = G.adj
    changed = False
    while S.k > 3:
        try:
            nxt = _shrink_once(adj, S)
            if nxt is None:
                nxt = _shrink_once(adj, _reflect(S))
        except _BuildingHere as hit:
            raise _contract_with_building(G, hit.vertices, "rewrite reached a building") from None
        if nxt is not None:
            problems = validate_sunflower(G, nxt)
            if problems:
                raise _contract_with_building(G, S.vertices, f"rewrite produced an invalid sunflower: {problems}")
            S, changed = nxt, True
            continue
        # both end centers are seen by everyone; consecutive centers adjacent, petals single tips
        k = S.k
        for i in range(k - 1):
            if not _sees(adj, S.centers[i], S.centers[i + 1]) or len(S.petals[i]) != 3:
                raise _contract_with_building(G, S.vertices, f"petal {i} breaks the two-edge structure")
        # let every other tip play the role of the tip
        for r in range(k - 1):
            R = _rotate(S, r)
            try:
                hit = _shrink_once(adj, R) or _shrink_once(adj, _reflect(R))
            except _BuildingHere as b:
                raise _contract_with_building(G, b.vertices, "rewrite reached a building") from None
            if hit is not None:
                problems = validate_sunflower(G, hit)
                if problems:
                    raise _contract_with_building(G, R.vertices, f"rewrite produced an invalid sunflower: {problems}")
                S, changed = hit, True
                break
        else:
            return S, changed
    return S, changed


def _as_sun(G: Graph, S: SunflowerCertificate) -> SunCertificate:
    if any(len(p) != 3 for p in S.petals):
        raise _contract_with_building(G, S.vertices, "final sunflower has a long petal")
    cert = SunCertificate(tuple(p[1] for p in S.petals), S.centers)
    problems = validate_sun(G, cert)
    if problems:
        raise _contract_with_building(G, S.vertices, f"final sunflower is not a sun: {problems}")
    return cert


def audit_all_branches(G: Graph, audit: SunAudit | None = None) -> SunAudit:
    """Run every (x, yz) branch of the decision loop with auditing, no short-circuit."""
    audit = audit if audit is not None else SunAudit()
    for branch in _branches(G.adj, G.all_mask):
        _branch_true(G.adj, G.all_mask, branch, audit)
    return audit
