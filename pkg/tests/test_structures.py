"""Colored digraphs, valency, spanning tests, induced substructures."""

import random

import pytest

from spantourn.structures import (ColoredDigraph, Hypergraph,
                                  finer_or_equal_partitions, induced,
                                  is_k_spanning, is_strongly_connected,
                                  maximal_valency, minimal_spanning_k,
                                  relation_max_valency, small_union)
from tests.conftest import random_colored_tournament


def three_cycle():
    return ColoredDigraph(3, [0, 0, 0], {(0, 1): 0, (1, 2): 0, (2, 0): 0})


def transitive3():
    return ColoredDigraph(3, [0, 0, 0], {(0, 1): 0, (0, 2): 0, (1, 2): 0})


def test_validation():
    with pytest.raises(ValueError):
        ColoredDigraph(2, [0, 0], {(0, 0): 0})  # loop
    with pytest.raises(ValueError):
        ColoredDigraph(2, [0, 2], {})  # gap in vertex colors
    with pytest.raises(ValueError):
        ColoredDigraph(2, [0, 0], {(0, 1): 1})  # gap in arc colors
    with pytest.raises(ValueError):
        ColoredDigraph(2, [0], {})


def test_tournament_recognition():
    assert three_cycle().is_tournament()
    assert transitive3().is_tournament()
    x = ColoredDigraph(3, [0, 0, 0], {(0, 1): 0})
    assert not x.is_tournament()
    y = ColoredDigraph(2, [0, 0], {(0, 1): 0, (1, 0): 0})
    assert not y.is_tournament()


def test_classes_and_matrix():
    x = ColoredDigraph(3, [0, 1, 0], {(0, 1): 0, (1, 2): 1, (2, 0): 0})
    assert x.vertex_classes() == [[0, 2], [1]]
    assert x.arc_classes() == [[(0, 1), (2, 0)], [(1, 2)]]
    m = x.color_matrix()
    assert m[0][1] == 0 and m[1][0] == -1 and m[1][2] == 1


def test_valency():
    assert relation_max_valency([]) == 0
    assert relation_max_valency([(0, 1), (0, 2), (1, 2)]) == 2
    assert maximal_valency(three_cycle(), 0) == 1
    assert maximal_valency(transitive3(), 0) == 2


def test_small_union():
    x = ColoredDigraph(3, [0, 0, 0], {(0, 1): 0, (0, 2): 0, (1, 2): 1})
    assert small_union(x, 1) == {(1, 2)}
    assert small_union(x, 2) == {(0, 1), (0, 2), (1, 2)}


def test_strong_connectivity():
    assert is_strongly_connected([(0, 1), (1, 2), (2, 0)], 3)
    assert not is_strongly_connected([(0, 1), (0, 2), (1, 2)], 3)
    assert is_strongly_connected([], 1)


def test_spanning():
    assert is_k_spanning(three_cycle(), 1)
    assert not is_k_spanning(transitive3(), 1)
    assert minimal_spanning_k(three_cycle()) == 1
    assert minimal_spanning_k(transitive3()) is None
    # reachable-from-source mode accepts one-way spanning
    star = ColoredDigraph(3, [0, 0, 0], {(0, 1): 0, (0, 2): 0, (1, 2): 1})
    assert is_k_spanning(star, 2, source=0)
    assert not is_k_spanning(star, 2)


def test_induced():
    x = ColoredDigraph(4, [0, 1, 1, 0],
                       {(0, 1): 2, (1, 2): 0, (3, 2): 1, (0, 3): 2, (2, 0): 0, (1, 3): 1})
    sub = induced(x, [1, 2, 3])
    assert sub.vertices == (1, 2, 3)
    assert sub.graph.vertex_colors == (1, 1, 0)
    assert sub.vertex_color_map == (0, 1)
    assert sub.graph.arcs == {(0, 1): 0, (2, 1): 1, (0, 2): 1}
    assert sub.arc_color_map == (0, 1)
    assert sub.original_vertex(0) == 1
    with pytest.raises(ValueError):
        induced(x, [])


def test_finer_or_equal():
    coarse = ColoredDigraph(3, [0, 0, 0], {(0, 1): 0, (1, 2): 0, (2, 0): 0})
    fine = ColoredDigraph(3, [0, 1, 0], {(0, 1): 0, (1, 2): 1, (2, 0): 0})
    assert finer_or_equal_partitions(fine, coarse)
    assert finer_or_equal_partitions(coarse, coarse)
    assert not finer_or_equal_partitions(coarse, fine)


def test_hypergraph_dedup_warns():
    with pytest.warns(UserWarning):
        h = Hypergraph(3, [[0, 1], [1, 0]])
    assert len(h.edges) == 1
    with pytest.raises(ValueError):
        Hypergraph(2, [[0, 2]])


def test_random_tournaments_are_valid(rng):
    for _ in range(20):
        x = random_colored_tournament(rng.randint(3, 8), rng)
        assert x.is_tournament()
        assert sum(len(c) for c in x.vertex_classes()) == x.n
        assert sum(len(c) for c in x.arc_classes()) == len(x.arcs)
