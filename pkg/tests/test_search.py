"""Searches against the brute-force oracles."""

import pytest

from spantourn import (ColoredDigraph, Hypergraph, Perm, aut_colored,
                       aut_digraph_cap, aut_hypergraph_cap, brute_aut,
                       brute_iso, bsgs, iso_rep, subgroup_search,
                       tournament_iso)
from spantourn.search import _oracle_cap
from tests.conftest import apply_perm, random_colored_tournament, random_perm


def test_oracle_cap(monkeypatch):
    x = random_colored_tournament(5, __import__("random").Random(0))
    with pytest.raises(ValueError):
        brute_aut(x, cap=4)
    monkeypatch.setenv("SPANTOURN_ORACLE_CAP", "4")
    assert _oracle_cap(None) == 4
    with pytest.raises(ValueError):
        brute_aut(x)
    assert brute_aut(x, cap=5).degree == 5


def test_brute_iso_respects_colors():
    x = ColoredDigraph(3, [0, 0, 1], {(0, 1): 0, (1, 2): 0, (2, 0): 0})
    y = ColoredDigraph(3, [0, 1, 0], {(0, 1): 0, (1, 2): 0, (2, 0): 0})
    maps = brute_iso(x, y)
    assert all(p[2] == 1 for p in maps)
    assert len(maps) == 1


def test_aut_colored_matches_brute(rng):
    for _ in range(40):
        x = random_colored_tournament(rng.randint(2, 7), rng)
        fast = aut_colored(x)
        slow = brute_aut(x)
        assert fast.order() == slow.order()
        assert all(g in slow for g in fast.generators)


def test_iso_rep_matches_brute(rng):
    for _ in range(30):
        n = rng.randint(3, 6)
        x = random_colored_tournament(n, rng)
        y = apply_perm(x, random_perm(n, rng))
        rep = iso_rep(x, y)
        maps = brute_iso(x, y)
        assert rep in maps
        z = random_colored_tournament(n, rng)
        assert (iso_rep(x, z) is None) == (not brute_iso(x, z))


def test_tournament_iso_coset_is_full_iso_set(rng):
    for _ in range(15):
        n = rng.randint(3, 6)
        x = random_colored_tournament(n, rng)
        y = apply_perm(x, random_perm(n, rng))
        c = tournament_iso(x, y)
        assert set(c.elements()) == set(brute_iso(x, y))


def test_tournament_iso_rejects_non_tournament():
    x = ColoredDigraph(2, [0, 0], {})
    with pytest.raises(ValueError):
        tournament_iso(x, x)


def test_subgroup_search_point_stabilizer():
    s4 = bsgs([Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(0, 1, 2, 3)])], 4)
    stab = subgroup_search(s4, lambda g: g[0] == 0)
    assert stab.order() == 6
    assert all(g[0] == 0 for g in stab.elements())


def test_aut_digraph_cap_equals_brute_inside_group(rng):
    for _ in range(15):
        n = rng.randint(3, 6)
        x = random_colored_tournament(n, rng)
        k = brute_aut(x)  # solvable: tournament automorphism groups have odd order
        capped = aut_digraph_cap(x, k)
        assert capped.order() == k.order()


def test_aut_digraph_cap_rejects_unsolvable():
    x = ColoredDigraph(5, [0] * 5, {(u, (u + d) % 5): 0
                                    for u in range(5) for d in (1, 2)})
    s5 = bsgs([Perm.from_cycles(5, [(0, 1)]), Perm.from_cycles(5, [(0, 1, 2, 3, 4)])], 5)
    with pytest.raises(ValueError):
        aut_digraph_cap(x, s5)


def test_aut_hypergraph_cap():
    # edges {0,1} and {2,3}; the cyclic rotation group of 4 points
    h = Hypergraph(4, [[0, 1], [2, 3]])
    c4 = bsgs([Perm.from_cycles(4, [(0, 1, 2, 3)])], 4)
    capped = aut_hypergraph_cap(h, c4)
    assert capped.order() == 2
    assert Perm.from_cycles(4, [(0, 2), (1, 3)]) in capped
