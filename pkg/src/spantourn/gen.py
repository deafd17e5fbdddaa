"""Instance generators: Cayley tournaments and seeded random instances.

A Cayley tournament over an odd-order group G uses a connection set A
containing exactly one of {g, g^-1} for every nonidentity g; the ordered
partition of A into parts becomes the arc coloring.  Groups are either
cyclic (given by their odd order) or arbitrary (given by an explicit
multiplication table).
"""

from __future__ import annotations

from random import Random
from typing import Sequence

from .structures import ColoredDigraph, is_k_spanning

Group = int | Sequence[Sequence[int]]


def _group_table(group: Group) -> tuple[int, list[list[int]], int]:
    """Normalize a group spec to (order, multiplication table, identity)."""
    if isinstance(group, int):
        n = group
        if n < 1 or n % 2 == 0:
            raise ValueError("group order must be odd and positive")
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return n, table, 0
    table = [list(row) for row in group]
    n = len(table)
    if n < 1 or n % 2 == 0:
        raise ValueError("group order must be odd and positive")
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise ValueError("multiplication table rows must be permutations")
    identity = next((e for e in range(n)
                     if all(table[e][x] == x and table[x][e] == x for x in range(n))),
                    None)
    if identity is None:
        raise ValueError("multiplication table has no identity")
    return n, table, identity


def _inverse(table: list[list[int]], identity: int, g: int) -> int:
    return table[g].index(identity)


def cayley_tournament(group: Group, parts: Sequence[Sequence[int]]) -> ColoredDigraph:
    """Cayley tournament of a group with a partitioned connection set.

    ``parts`` is an ordered partition A_1..A_m of a connection set A
    with identity not in A and exactly one of {g, g^-1} in A for every
    nonidentity g; the arc (x, x*a) gets color i for a in A_i.
    """
    n, table, identity = _group_table(group)
    parts = [list(p) for p in parts]
    union: list[int] = []
    for p in parts:
        if not p:
            raise ValueError("empty connection part")
        union.extend(p)
    aset = set(union)
    if len(aset) != len(union):
        raise ValueError("connection parts are not disjoint")
    if identity in aset:
        raise ValueError("identity in connection set")
    for g in range(n):
        if g == identity:
            continue
        if (g in aset) + (_inverse(table, identity, g) in aset) != 1:
            raise ValueError("connection set must contain exactly one of each "
                             "inverse pair (fails at %d)" % g)
    arcs = {}
    for i, p in enumerate(parts):
        for a in p:
            for x in range(n):
                arcs[(x, table[x][a])] = i
    return ColoredDigraph(n, [0] * n, arcs)


def is_spanning_connection(parts: Sequence[Sequence[int]], k: int, group: Group) -> bool:
    """Whether the parts of size at most k together generate the group."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n, table, identity = _group_table(group)
    small = [a for p in parts if len(p) <= k for a in p]
    closure = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for a in small:
            y = table[x][a]
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    return len(closure) == n


def random_k_spanning(n: int, k: int, num_extra_colors: int, seed: int) -> ColoredDigraph:
    """Seeded random k-spanning colored tournament on Z_n (n odd).

    A random circulant orientation is partitioned into small classes of
    valency at most k plus up to ``num_extra_colors`` merged leftover
    classes; candidates are rejected until one is k-spanning.
    """
    if n % 2 == 0 or n < 3:
        raise ValueError("n must be odd and at least 3")
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = Random(seed)
    for _ in range(500):
        conn = [rng.choice((g, n - g)) for g in range(1, (n + 1) // 2)]
        rng.shuffle(conn)
        cut = rng.randint(1, len(conn))
        small, big = conn[:cut], conn[cut:]
        parts = [small[i:i + k] for i in range(0, len(small), k)]
        if big:
            t = max(1, min(num_extra_colors, len(big)))
            groups: list[list[int]] = [[] for _ in range(t)]
            for i, a in enumerate(big):
                groups[i % t].append(a)
            parts.extend(groups)
        x = cayley_tournament(n, parts)
        if is_k_spanning(x, k):
            return x
    raise RuntimeError("sampling budget exceeded for n=%d, k=%d" % (n, k))
