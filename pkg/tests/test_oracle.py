import pytest

from sunfinder import families as F
from sunfinder.certificates import BuildingCertificate, validate_building, validate_sun
from sunfinder.graph import disjoint_union, from_edges, induced_subgraph
from sunfinder.oracle import (
    OracleRefusal,
    StructureKind,
    brute_force_has_sun,
    is_sun_graph,
    oracle_find,
    oracle_has_building,
    oracle_has_sun,
)
from sunfinder.orderings import is_chordal, is_strongly_chordal

from conftest import STRONGLY_CHORDAL_FIXTURES, small_random_graphs


def test_oracle_find_examples():
    w = oracle_find(F.sun(3), StructureKind.SUN)
    assert w.vertices == tuple(range(6))
    w = oracle_find(F.house(), StructureKind.BUILDING)
    assert len(w.vertices) == 5
    assert oracle_find(F.cycle(6), StructureKind.SUN) is None


def test_oracle_has_sun_examples():
    assert oracle_has_sun(F.sun(4))
    assert not oracle_has_sun(F.cycle(7))
    for G in STRONGLY_CHORDAL_FIXTURES.values():
        assert not oracle_has_sun(G)


def test_is_sun_graph():
    cert = is_sun_graph(F.sun(3))
    assert cert is not None and cert.k == 3 and validate_sun(F.sun(3), cert) == []
    assert is_sun_graph(disjoint_union(F.sun(3), from_edges(1, []))) is None
    assert is_sun_graph(F.cycle(6)) is None
    for k in (4, 5, 6):
        assert is_sun_graph(F.generate("k-sun", k)).k == k


def test_refusal_is_explicit():
    with pytest.raises(OracleRefusal):
        oracle_has_sun(F.cycle(16))
    with pytest.raises(OracleRefusal):
        oracle_find(F.cycle(9), StructureKind.BUILDING, bound=8)
    with pytest.raises(OracleRefusal):
        oracle_find(F.cycle(9), StructureKind.GEM, bound=4)
    with pytest.raises(OracleRefusal):
        brute_force_has_sun(F.cycle(12))


def test_sun_oracle_self_consistency_and_witnesses():
    for G in small_random_graphs(200, (6, 10), seed=21):
        w = oracle_find(G, StructureKind.SUN)
        assert oracle_has_sun(G) == (w is not None)
        if w is not None:
            sub, _ = induced_subgraph(G, w.vertices)
            assert is_sun_graph(sub) is not None


def test_sun_oracle_against_raw_enumeration():
    for G in small_random_graphs(150, (6, 9), seed=22):
        assert oracle_has_sun(G) == brute_force_has_sun(G)


def test_building_oracles_agree():
    for G in small_random_graphs(150, (5, 9), seed=23):
        w = oracle_find(G, StructureKind.BUILDING)
        assert oracle_has_building(G) == (w is not None)
        if w is not None:
            cycle = w.roles["cycle"]
            k = cycle.index(w.roles["apex"])
            hole = cycle[k:] + cycle[:k]
            chord = tuple(sorted((hole[1], hole[-1])))
            assert chord == w.roles["chord"]
            assert validate_building(G, BuildingCertificate(hole, chord, hole[0])) == []


def test_cycle_oracle_matches_chordality():
    for G in small_random_graphs(150, (4, 9), seed=24):
        assert (oracle_find(G, StructureKind.CYCLE) is None) == is_chordal(G).chordal


def test_generators_certified():
    for s in range(10):
        assert is_chordal(F.generate("random-chordal", 10, s))
        G = F.generate("random-strongly-chordal", 10, s)
        assert is_strongly_chordal(G) and not oracle_has_sun(G)
        assert oracle_find(F.generate("random-building-free", 9, s), StructureKind.BUILDING) is None
        G = F.generate("random-building-gem-free", 9, s)
        assert oracle_find(G, StructureKind.BUILDING) is None and oracle_find(G, StructureKind.GEM) is None
        G = F.generate("k-sun-plus-noise", 12, s, k=3)
        assert oracle_has_sun(G) and not oracle_has_building(G)
    assert F.generate("cycle-power", 9, power=2) == F.cycle_power(9, 2)
    assert F.generate("cycle", 5) == F.cycle(5)
    assert F.generate("random-gnp", 8, 3) == F.generate("random-gnp", 8, 3)
    assert F.generate("sparse-building-free", 20, 1).n == 20


def test_generator_errors():
    with pytest.raises(ValueError, match="unknown family"):
        F.generate("nope", 5)
    with pytest.raises(F.BudgetExhausted) as info:
        F._grow(6, 0, 0.9, 1, lambda G: G.n < 3, "impossible")
    assert info.value.attempts > 0


def test_catalog_sizes():
    # connected graphs on 1..7 vertices up to isomorphism: 1, 1, 2, 6, 21, 112, 853
    assert len(F.catalog(7)) == 996
    assert len(F.catalog(4, connected=False)) == 1 + 2 + 4 + 11
    # 8 vertices: 11117 connected, 12346 in all
    assert len(F.catalog(8)) == 996 + 11117
    assert len(F.catalog(8, connected=False)) - len(F.catalog(7, connected=False)) == 12346
    with pytest.raises(ValueError):
        F.catalog(9)
