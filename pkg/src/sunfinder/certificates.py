"""Certificate types and their validators.

The validators only read adjacency bits of the input graph.  They share no
code with the detectors that produce the certificates, so a detector bug
cannot hide behind a matching validator bug.  Each ``validate_*`` function
returns a list of human-readable problems; an empty list means the
certificate is valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph


class ContractError(AssertionError):
    """An internal invariant failed.  Indicates a bug, not bad user input."""


@dataclass(frozen=True)
class SunCertificate:
    """A k-sun: ``tips[i]`` is adjacent to ``centers[i]`` and ``centers[i+1 mod k]``."""

    tips: tuple[int, ...]
    centers: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.tips)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.tips + self.centers))

    def to_dict(self) -> dict:
        return {"kind": "sun", "k": self.k, "tips": list(self.tips), "centers": list(self.centers)}


@dataclass(frozen=True)
class SunflowerCertificate:
    """Centers plus petal paths; ``petals[i]`` runs from ``centers[i]`` to ``centers[i+1 mod k]``
    and includes both endpoints."""

    centers: tuple[int, ...]
    petals: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.centers)

    @property
    def vertices(self) -> tuple[int, ...]:
        vs = set(self.centers)
        for p in self.petals:
            vs.update(p)
        return tuple(sorted(vs))


@dataclass(frozen=True)
class BuildingCertificate:
    """A hole listed from its apex, plus the chord joining the apex's two hole neighbours."""

    hole: tuple[int, ...]
    chord: tuple[int, int]
    apex: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.hole))

    def to_dict(self) -> dict:
        return {"kind": "building", "hole": list(self.hole), "chord": list(self.chord), "apex": self.apex}


@dataclass(frozen=True)
class NoseBull:
    """A bull whose nose sees exactly the middle edge of the P4 ``path``."""

    nose: int
    path: tuple[int, int, int, int]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.nose,) + self.path))

    def to_dict(self) -> dict:
        return {"kind": "bull", "nose": self.nose, "path": list(self.path)}


@dataclass(frozen=True)
class GemWitness:
    """An induced P4 plus a hub adjacent to all four of its vertices."""

    path: tuple[int, int, int, int]
    hub: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.hub,) + self.path))

    def to_dict(self) -> dict:
        return {"kind": "gem", "path": list(self.path), "hub": self.hub}


def _adj(G: Graph, u: int, v: int) -> bool:
    return bool(G.adj[u] >> v & 1)


def _ids_ok(G: Graph, vs, problems: list[str]) -> bool:
    vs = list(vs)
    if any(not 0 <= v < G.n for v in vs):
        problems.append(f"vertex id out of range in {vs}")
        return False
    if len(set(vs)) != len(vs):
        problems.append(f"repeated vertex in {vs}")
        return False
    return True


def _check_induced_path(G: Graph, path, problems: list[str], what: str, ends_free: bool = False) -> None:
    last = len(path) - 1
    for i, u in enumerate(path):
        for j in range(i + 1, len(path)):
            if ends_free and (i, j) == (0, last):
                continue
            want = j == i + 1
            if _adj(G, u, path[j]) != want:
                problems.append(f"{what}: pair ({u}, {path[j]}) should {'' if want else 'not '}be adjacent")


def _is_chordal_by_peeling(G: Graph, vs) -> bool:
    left = set(vs)
    while left:
        for v in sorted(left):
            nb = [u for u in left if u != v and _adj(G, u, v)]
            if all(_adj(G, a, b) for a, b in combinations(nb, 2)):
                left.remove(v)
                break
        else:
            return False
    return True


def validate_sun(G: Graph, cert: SunCertificate) -> list[str]:
    problems: list[str] = []
    tips, centers = cert.tips, cert.centers
    k = len(tips)
    if k < 3 or len(centers) != k:
        return [f"need k >= 3 tips and as many centers, got {len(tips)} and {len(centers)}"]
    if not _ids_ok(G, tips + centers, problems):
        return problems
    for a, b in combinations(centers, 2):
        if not _adj(G, a, b):
            problems.append(f"centers {a} and {b} are not adjacent")
    for a, b in combinations(tips, 2):
        if _adj(G, a, b):
            problems.append(f"tips {a} and {b} are adjacent")
    for i, d in enumerate(tips):
        want = {centers[i], centers[(i + 1) % k]}
        seen = {c for c in centers if _adj(G, d, c)}
        if seen != want:
            problems.append(f"tip {d} sees centers {sorted(seen)}, expected {sorted(want)}")
    if not problems and not _is_chordal_by_peeling(G, tips + centers):
        problems.append("certificate does not induce a chordal graph")
    return problems


def validate_sunflower(G: Graph, cert: SunflowerCertificate) -> list[str]:
    problems: list[str] = []
    k = cert.k
    if k < 3 or len(cert.petals) != k:
        return [f"need k >= 3 centers with one petal each, got {k} centers, {len(cert.petals)} petals"]
    interiors = []
    for i, petal in enumerate(cert.petals):
        if len(petal) < 3:
            problems.append(f"petal {i} has fewer than two edges")
            continue
        if petal[0] != cert.centers[i] or petal[-1] != cert.centers[(i + 1) % k]:
            problems.append(f"petal {i} does not join centers {cert.centers[i]} and {cert.centers[(i + 1) % k]}")
        if not _ids_ok(G, petal, problems):
            return problems
        # the two end centers may be adjacent: center adjacency is unconstrained
        _check_induced_path(G, petal, problems, f"petal {i}", ends_free=True)
        interiors.append(petal[1:-1])
    if problems:
        return problems
    flat = [v for inner in interiors for v in inner]
    if not _ids_ok(G, list(cert.centers) + flat, problems):
        return problems
    for i, inner in enumerate(interiors):
        own = {cert.centers[i], cert.centers[(i + 1) % k]}
        for v in inner:
            for c in cert.centers:
                if c not in own and _adj(G, v, c):
                    problems.append(f"petal vertex {v} sees foreign center {c}")
            for j, other in enumerate(interiors):
                if j > i:
                    for w in other:
                        if _adj(G, v, w):
                            problems.append(f"petal vertices {v} and {w} of different petals are adjacent")
    return problems


def validate_building(G: Graph, cert: BuildingCertificate) -> list[str]:
    problems: list[str] = []
    hole = cert.hole
    if len(hole) < 5:
        return [f"hole has {len(hole)} vertices, need at least 5"]
    if not _ids_ok(G, hole, problems):
        return problems
    if hole[0] != cert.apex:
        problems.append("hole must start at the apex")
    ends = tuple(sorted((hole[1], hole[-1])))
    if tuple(sorted(cert.chord)) != ends:
        problems.append(f"chord {cert.chord} does not join the apex's hole neighbours {ends}")
    L = len(hole)
    for i in range(L):
        for j in range(i + 1, L):
            cyclic = j == i + 1 or (i == 0 and j == L - 1)
            chord = {hole[i], hole[j]} == set(ends)
            want = cyclic or chord
            if _adj(G, hole[i], hole[j]) != want:
                problems.append(f"pair ({hole[i]}, {hole[j]}) should {'' if want else 'not '}be adjacent")
    return problems


def validate_nose_bull(G: Graph, bull: NoseBull, within: set[int] | None = None) -> list[str]:
    problems: list[str] = []
    a2, a1, b1, b2 = bull.path
    vs = (bull.nose, a2, a1, b1, b2)
    if not _ids_ok(G, vs, problems):
        return problems
    if within is not None and not set(vs) <= within:
        problems.append("bull leaves the allowed vertex set")
    _check_induced_path(G, bull.path, problems, "bull body")
    for v in bull.path:
        want = v in (a1, b1)
        if _adj(G, bull.nose, v) != want:
            problems.append(f"nose {bull.nose} {'misses' if want else 'sees'} {v}")
    return problems


def validate_gem(G: Graph, gem: GemWitness) -> list[str]:
    problems: list[str] = []
    if not _ids_ok(G, gem.path + (gem.hub,), problems):
        return problems
    _check_induced_path(G, gem.path, problems, "gem path")
    for v in gem.path:
        if not _adj(G, gem.hub, v):
            problems.append(f"hub {gem.hub} misses {v}")
    return problems


def validate_near_building(G: Graph, vertices) -> list[str]:
    """``vertices`` is ``(v, w1, ..., wj)`` in the labelled order."""
    problems: list[str] = []
    v, *w = vertices
    j = len(w)
    if j < 4:
        return [f"need j >= 4, got {j}"]
    if not _ids_ok(G, vertices, problems):
        return problems
    allowed = {frozenset((v, w[0])), frozenset((v, w[-1])), frozenset((w[0], w[-1]))}
    allowed |= {frozenset((w[i], w[i + 1])) for i in range(j - 1)}
    required = set(allowed)
    optional = {frozenset((w[-1], w[i])) for i in range(1, j - 2)}
    for a, b in combinations(vertices, 2):
        e = frozenset((a, b))
        has = _adj(G, a, b)
        if e in required and not has:
            problems.append(f"missing required edge {a}-{b}")
        elif has and e not in required and e not in optional:
            problems.append(f"unexpected edge {a}-{b}")
    return problems


def certificate_from_dict(data: dict):
    """Inverse of the ``to_dict`` methods, keyed on ``data["kind"]``."""
    kind = data.get("kind")
    if kind == "sun":
        return SunCertificate(tuple(data["tips"]), tuple(data["centers"]))
    if kind == "building":
        return BuildingCertificate(tuple(data["hole"]), tuple(data["chord"]), data["apex"])
    if kind == "bull":
        return NoseBull(data["nose"], tuple(data["path"]))
    if kind == "gem":
        return GemWitness(tuple(data["path"]), data["hub"])
    raise ValueError(f"unknown certificate kind {kind!r}")


def validate(G: Graph, cert) -> list[str]:
    """Dispatch to the validator matching the certificate's type."""
    if isinstance(cert, SunCertificate):
        return validate_sun(G, cert)
    if isinstance(cert, BuildingCertificate):
        return validate_building(G, cert)
    if isinstance(cert, NoseBull):
        return validate_nose_bull(G, cert)
    if isinstance(cert, GemWitness):
        return validate_gem(G, cert)
    if isinstance(cert, SunflowerCertificate):
        return validate_sunflower(G, cert)
    raise TypeError(f"no validator for {type(cert).__name__}")
