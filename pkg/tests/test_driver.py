"""Driver: automorphism groups, the gadget, and isomorphism cosets."""

import pytest

from spantourn import (ColoredDigraph, DriverStats, aut_spanning, brute_aut,
                       brute_iso, build_gadget, cayley_tournament,
                       find_spanning_classes, is_k_spanning, iso_spanning,
                       minimal_spanning_k, triple_cycle_coset)
from spantourn.driver import gadget_part_coset
from tests.conftest import (apply_perm, random_colored_tournament,
                            random_perm, random_spanning_tournament)


def test_find_spanning_classes_prefers_color_order():
    x = cayley_tournament(7, [[1], [2], [4]])
    s, d, gamma, delta = find_spanning_classes(x, 1, {0})
    assert s == 0
    assert d == [(0, 1)]
    assert (gamma, delta) == ([0], [1])
    assert find_spanning_classes(x, 1, set(range(7))) is None


def test_aut_directed_cycle():
    x = cayley_tournament(3, [[1]])
    g = aut_spanning(x, 1)
    assert g.order() == 3


def test_aut_rejects_non_spanning():
    x = ColoredDigraph(3, [0, 0, 0], {(0, 1): 0, (0, 2): 0, (1, 2): 0})
    with pytest.raises(ValueError):
        aut_spanning(x, 1)


def test_aut_matches_brute(rng):
    for _ in range(25):
        x, k = random_spanning_tournament(rng.randint(3, 7), rng)
        g = aut_spanning(x, k)
        b = brute_aut(x)
        assert g.order() == b.order()
        assert all(p in b for p in g.generators)
        assert all(p in g for p in b.generators)


def test_stats_and_budget(rng):
    x, k = random_spanning_tournament(6, rng)
    st = DriverStats()
    aut_spanning(x, k, stats=st)
    assert 1 <= st.restart_count <= x.n * x.n


def test_trace_emits_lines(rng):
    x, k = random_spanning_tournament(5, rng)
    lines = []
    aut_spanning(x, k, trace=lines.append)
    assert lines and any(line.startswith("cap:") for line in lines)


def test_gadget_shape():
    x = cayley_tournament(5, [[1], [2]])
    y = cayley_tournament(5, [[1], [2]])
    t = build_gadget(x, y, 3)
    n = 5
    assert t.n == 3 * n + 1
    assert t.is_tournament()
    mu = 3 * n
    assert t.vertex_classes()[t.vertex_colors[mu]] == [mu]
    marked_color = t.arcs[(mu, 0)]
    marked = [v for v in range(3 * n) if t.arcs[(mu, v)] == marked_color]
    assert marked == [0, n + 3, 2 * n]
    assert is_k_spanning(t, 3, source=mu)


def test_gadget_rejects_mismatched_palettes():
    x = cayley_tournament(3, [[1]])
    y = ColoredDigraph(3, [0, 0, 1], {(0, 1): 0, (1, 2): 0, (2, 0): 0})
    with pytest.raises(ValueError):
        build_gadget(x, y, 0)


def test_triple_cycle_coset():
    x = cayley_tournament(7, [[1, 2, 4]])
    g = aut_spanning(x, minimal_spanning_k(x))
    # x -> 2x+1 sends 0 -> 1 -> 3 -> 0, so (0,1,3) has a witness
    c = triple_cycle_coset(g, 0, 1, 3)
    assert not c.is_empty
    assert all(q[0] == 1 and q[1] == 3 and q[3] == 0 for q in c.elements())
    # no map ax+b cycles 0 -> 1 -> 2 -> 0
    assert triple_cycle_coset(g, 0, 1, 2).is_empty


def test_iso_identity_pair(rng):
    x, k = random_spanning_tournament(5, rng)
    c = iso_spanning(x, x, k)
    assert not c.is_empty
    assert set(c.elements()) == set(brute_iso(x, x))


def test_iso_matches_brute(rng):
    done = 0
    while done < 8:
        x, k = random_spanning_tournament(rng.randint(3, 6), rng)
        y = apply_perm(x, random_perm(x.n, rng))
        c = iso_spanning(x, y, k)
        assert not c.is_empty
        assert set(c.elements()) == set(brute_iso(x, y))
        done += 1


def test_iso_negative(rng):
    done = 0
    while done < 5:
        x, k = random_spanning_tournament(5, rng)
        z, kz = random_spanning_tournament(5, rng)
        if kz != k or brute_iso(x, z):
            continue
        assert iso_spanning(x, z, k).is_empty
        done += 1


def test_gadget_part_coset_maps_parts(rng):
    x, k = random_spanning_tournament(4, rng)
    y = apply_perm(x, random_perm(4, rng))
    t = build_gadget(x, y, 0)
    found = None
    for beta in range(4):
        t = build_gadget(x, y, beta)
        a = aut_spanning(t, max(3, k), source=12)
        c = triple_cycle_coset(a, 0, 4 + beta, 8)
        if not c.is_empty:
            found = gadget_part_coset(c, 4)
            break
    assert found is not None
    isos = set(brute_iso(x, y))
    assert all(p in isos for p in found.elements())
