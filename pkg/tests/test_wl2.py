"""Pair refinement: contract, stability, equivariance, oracle comparison."""

import random

from spantourn import ColoredDigraph, cayley_tournament, wl2
from spantourn.structures import finer_or_equal_partitions
from spantourn.wl2 import initial_coloring, iterate_round, refine_to_stable
from tests.conftest import apply_perm, random_colored_tournament, random_perm


def pair_partition_oracle(x, tau=()):
    """Independent fixed-point classification of ordered pairs.

    Works on raw signature dictionaries without canonical renumbering and
    returns the partition as a set of frozen pair sets."""
    m = x.color_matrix()
    tau_sets = [frozenset(t) for t in tau]
    label = {}
    for u in range(x.n):
        for v in range(x.n):
            label[(u, v)] = (u == v, m[u][v], m[v][u],
                             x.vertex_colors[u], x.vertex_colors[v],
                             tuple(u in t for t in tau_sets),
                             tuple(v in t for t in tau_sets))
    while True:
        nxt = {}
        for u in range(x.n):
            for v in range(x.n):
                neigh = tuple(sorted((label[(u, w)], label[(w, v)])
                                     for w in range(x.n)))
                nxt[(u, v)] = (label[(u, v)], neigh)
        if len(set(nxt.values())) == len(set(label.values())):
            break
        label = nxt
    cells = {}
    for pair, sig in label.items():
        cells.setdefault(sig, set()).add(pair)
    return {frozenset(c) for c in cells.values()}


def pair_partition(coloring):
    cells = {}
    for pair, c in coloring.colors.items():
        cells.setdefault(c, set()).add(pair)
    return {frozenset(c) for c in cells.values()}


def test_single_class_cycle_stays_single():
    x = ColoredDigraph(3, [0, 0, 0], {(0, 1): 0, (1, 2): 0, (2, 0): 0})
    y = wl2(x)
    assert y.num_vertex_colors == 1
    assert y == wl2(y)


def test_individualization_singles_out_vertex():
    x = ColoredDigraph(5, [0] * 5, {(u, (u + d) % 5): 0
                                    for u in range(5) for d in (1, 2)})
    y = wl2(x, [[3]])
    cls = y.vertex_classes()
    assert [3] in cls


def test_result_refines_input(rng):
    for _ in range(10):
        x = random_colored_tournament(rng.randint(3, 7), rng)
        y = wl2(x)
        assert finer_or_equal_partitions(y, x)
        assert y == wl2(y)


def test_tau_cells_are_unions_of_classes(rng):
    for _ in range(10):
        n = rng.randint(4, 7)
        x = random_colored_tournament(n, rng)
        cell = rng.sample(range(n), rng.randint(1, n - 1))
        y = wl2(x, [cell])
        colors_in = {y.vertex_colors[v] for v in cell}
        colors_out = {y.vertex_colors[v] for v in range(n) if v not in cell}
        assert not colors_in & colors_out


def test_round_color_count_nondecreasing(rng):
    x = random_colored_tournament(6, rng)
    c = initial_coloring(x, [])
    for _ in range(3):
        nxt = iterate_round(c, x)
        assert nxt.num_colors() >= c.num_colors()
        c = nxt


def test_equivariance(rng):
    for _ in range(10):
        n = rng.randint(3, 7)
        x = random_colored_tournament(n, rng)
        p = random_perm(n, rng)
        assert wl2(apply_perm(x, p)) == apply_perm(wl2(x), p)


def test_matches_oracle_on_circulant():
    x = cayley_tournament(7, [[1, 2, 4]])
    got = pair_partition(refine_to_stable(x, []))
    assert got == pair_partition_oracle(x)


def test_matches_oracle_random(rng):
    for _ in range(10):
        n = rng.randint(3, 6)
        x = random_colored_tournament(n, rng)
        tau = [rng.sample(range(n), rng.randint(1, n))] if rng.random() < 0.5 else []
        assert pair_partition(refine_to_stable(x, tau)) == pair_partition_oracle(x, tau)
