"""Shared instance generators for the test suite."""

from __future__ import annotations

import random

import pytest

from spantourn import ColoredDigraph, Perm, minimal_spanning_k


def random_colored_tournament(n: int, rng: random.Random,
                              max_vcolors: int = 2, max_acolors: int = 3) -> ColoredDigraph:
    """Random tournament with compacted random vertex/arc colors."""
    vc = [rng.randrange(max_vcolors) for _ in range(n)]
    vused = sorted(set(vc))
    vc = [vused.index(c) for c in vc]
    arcs: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            a, b = (u, v) if rng.random() < 0.5 else (v, u)
            arcs[(a, b)] = rng.randrange(max_acolors)
    aused = sorted(set(arcs.values()))
    return ColoredDigraph(n, vc, {p: aused.index(c) for p, c in arcs.items()})


def random_spanning_tournament(n: int, rng: random.Random, tries: int = 200):
    """A random colored tournament that is k-spanning for some k <= n,
    together with that minimal k."""
    for _ in range(tries):
        x = random_colored_tournament(n, rng)
        k = minimal_spanning_k(x)
        if k is not None and k <= n:
            return x, k
    raise RuntimeError("no spanning instance found for n=%d" % n)


def random_perm(n: int, rng: random.Random) -> Perm:
    return Perm(rng.sample(range(n), n))


def apply_perm(x: ColoredDigraph, p: Perm) -> ColoredDigraph:
    """Image of a colored digraph under a vertex relabeling."""
    vc = [0] * x.n
    for v in range(x.n):
        vc[p[v]] = x.vertex_colors[v]
    return ColoredDigraph(x.n, vc, {(p[u], p[v]): c for (u, v), c in x.arcs.items()})


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0)
