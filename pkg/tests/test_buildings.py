import random

import networkx as nx

from sunfinder import families as F
from sunfinder.buildings import (
    find_building,
    find_building_fast,
    find_bull_with_nose,
    find_gem,
    find_near_building,
    list_triangles,
)
from sunfinder.certificates import (
    validate_building,
    validate_gem,
    validate_near_building,
    validate_nose_bull,
)
from sunfinder.graph import from_edges, induced_subgraph
from sunfinder.oracle import StructureKind, oracle_find, oracle_has_building

from conftest import brute_triangles, small_random_graphs, to_nx


def test_house_certificate():
    cert = find_building(F.house())
    assert cert.apex == 1 and cert.chord == (0, 2) and cert.hole == (1, 0, 4, 3, 2)
    assert validate_building(F.house(), cert) == []
    assert find_building_fast(F.house()) == cert


def test_building_free_fixtures():
    for G in (F.cycle(6), F.domino(), from_edges(4, []), F.complete(5), F.sun(4)):
        assert find_building(G) is None
        assert find_building_fast(G) is None
    assert oracle_find(F.domino(), StructureKind.BUILDING) is None


def test_c9_squared_has_building():
    G = F.cycle_power(9, 2)
    cert = find_building(G)
    assert cert is not None and validate_building(G, cert) == []


def test_triangles():
    assert len(list_triangles(F.complete(4))) == 4
    assert list_triangles(F.cycle(5)) == []
    # brute-force triple enumeration finds 4 (the center triangle plus one per tip)
    assert len(brute_triangles(F.sun(3))) == 4
    assert list_triangles(F.sun(3)) == brute_triangles(F.sun(3))


def test_triangles_match_brute_force():
    for G in small_random_graphs(100, (3, 14), seed=5):
        assert list_triangles(G) == brute_triangles(G)
        assert len(list_triangles(G)) == sum(nx.triangles(to_nx(G)).values()) // 3


def test_building_matches_oracle(catalog7):
    for G in catalog7:
        cert = find_building(G)
        assert (cert is not None) == oracle_has_building(G)
        assert (find_building_fast(G) is None) == (cert is None)
        if cert is not None:
            assert validate_building(G, cert) == []


def test_building_matches_oracle_random():
    rng = random.Random(6)
    for i in range(150):
        n = rng.randint(8, 13)
        G = F.random_gnp(n, rng.choice([0.2, 0.3, 0.45]), 600 + i)
        cert = find_building(G)
        assert (cert is not None) == oracle_has_building(G)
        assert find_building_fast(G) == cert
        if cert:
            assert validate_building(G, cert) == []


def test_fast_and_plain_agree_on_certificates():
    for G in small_random_graphs(200, (5, 12), seed=7):
        assert find_building_fast(G) == find_building(G)


def test_monotone_under_induced_subgraphs():
    rng = random.Random(8)
    for s in range(40):
        G = F.random_building_free(10, s)
        for _ in range(10):
            S = [v for v in range(G.n) if rng.random() < 0.7]
            assert find_building(induced_subgraph(G, S)[0]) is None


def test_gem():
    g = find_gem(F.gem())
    assert g is not None and validate_gem(F.gem(), g) == []
    for k in (3, 4, 5):
        g = find_gem(F.sun(k))
        assert g is not None and validate_gem(F.sun(k), g) == []
    for s in range(10):
        assert find_gem(F.random_tree(12, s)) is None


def test_gem_matches_oracle(catalog8):
    for G in catalog8:
        assert (find_gem(G) is None) == (oracle_find(G, StructureKind.GEM) is None)


def test_bull_with_nose():
    B = F.bull()
    hit = find_bull_with_nose(B, 4)
    assert hit is not None and hit.nose == 4 and validate_nose_bull(B, hit) == []
    # vertex 0 has degree 1: a horn, not the nose; exhaustive 5-subset check agrees
    assert find_bull_with_nose(B, 0) is None
    assert oracle_find(B, StructureKind.BULL, nose=0) is None
    G = F.cycle_power(9, 2)
    for v in range(9):
        hit = find_bull_with_nose(G, v)
        assert hit is not None and validate_nose_bull(G, hit) == []


def test_bull_matches_oracle():
    for G in small_random_graphs(80, (5, 8), seed=9):
        for v in range(G.n):
            assert (find_bull_with_nose(G, v) is None) == (oracle_find(G, StructureKind.BULL, nose=v) is None)


def test_near_building_fixtures():
    for j, extra in [(4, ()), (5, ()), (5, (2,)), (6, (2, 3, 4)), (7, (3,))]:
        G = F.near_building(j, extra)
        w = find_near_building(G)
        assert w is not None and validate_near_building(G, w) == [], (j, extra)
    assert find_near_building(F.complete(5)) is None


def test_near_building_matches_oracle(catalog7):
    for G in catalog7:
        w = find_near_building(G)
        assert (w is None) == (oracle_find(G, StructureKind.NEAR_BUILDING) is None)
        if w is not None:
            assert validate_near_building(G, w) == []


def test_claim_no_near_building_in_building_gem_free():
    for s in range(300):
        G = F.random_building_gem_free(5 + s % 9, s, p=[0.25, 0.45, 0.65][s % 3])
        assert find_near_building(G) is None
