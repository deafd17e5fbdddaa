"""Colored digraphs, tournaments, relations and hypergraphs.

A colored digraph carries ordered partitions of its vertices and arcs;
the partition cells are addressed by their integer color index, and
isomorphisms must map color i to color i exactly.  All values are
immutable after construction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Pair = tuple[int, int]


class ColoredDigraph:
    """Digraph with contiguous vertex colors 0..p-1 and arc colors 0..q-1."""

    __slots__ = ("n", "vertex_colors", "arcs", "_matrix", "_np_matrix",
                 "_vclasses", "_aclasses", "_is_tournament")

    def __init__(self, n: int, vertex_colors: Sequence[int], arcs: Mapping[Pair, int]):
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        vertex_colors = tuple(vertex_colors)
        if len(vertex_colors) != n:
            raise ValueError("vertex color list has wrong length")
        _check_contiguous(vertex_colors, "vertex")
        arcs = dict(arcs)
        for (u, v), c in arcs.items():
            if u == v:
                raise ValueError("loop at vertex %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("arc (%d,%d) out of range" % (u, v))
        _check_contiguous(tuple(arcs.values()), "arc", allow_empty=True)
        self.n = n
        self.vertex_colors = vertex_colors
        self.arcs = arcs
        self._matrix = None
        self._np_matrix = None
        self._vclasses = None
        self._aclasses = None
        self._is_tournament = None

    @property
    def num_vertex_colors(self) -> int:
        return max(self.vertex_colors) + 1

    @property
    def num_arc_colors(self) -> int:
        return max(self.arcs.values()) + 1 if self.arcs else 0

    def is_tournament(self) -> bool:
        """Exactly one arc between every unordered pair, no loops."""
        if self._is_tournament is None:
            ok = len(self.arcs) == self.n * (self.n - 1) // 2
            if ok:
                for u, v in self.arcs:
                    if (v, u) in self.arcs:
                        ok = False
                        break
            self._is_tournament = ok
        return self._is_tournament

    def vertex_classes(self) -> list[list[int]]:
        """Vertex-color classes, indexed by color."""
        if self._vclasses is None:
            classes: list[list[int]] = [[] for _ in range(self.num_vertex_colors)]
            for v, c in enumerate(self.vertex_colors):
                classes[c].append(v)
            self._vclasses = classes
        return self._vclasses

    def arc_classes(self) -> list[list[Pair]]:
        """Arc-color classes as sorted pair lists, indexed by color."""
        if self._aclasses is None:
            classes: list[list[Pair]] = [[] for _ in range(self.num_arc_colors)]
            for pair in sorted(self.arcs):
                classes[self.arcs[pair]].append(pair)
            self._aclasses = classes
        return self._aclasses

    def color_matrix(self) -> list[list[int]]:
        """Matrix M with M[u][v] = arc color of (u,v), or -1 for a non-arc."""
        if self._matrix is None:
            m = [[-1] * self.n for _ in range(self.n)]
            for (u, v), c in self.arcs.items():
                m[u][v] = c
            self._matrix = m
        return self._matrix

    def np_matrix(self):
        if self._np_matrix is None:
            import numpy as np
            self._np_matrix = np.array(self.color_matrix(), dtype=np.int32)
        return self._np_matrix

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColoredDigraph)
                and self.n == other.n
                and self.vertex_colors == other.vertex_colors
                and self.arcs == other.arcs)

    def __hash__(self):
        return hash((self.n, self.vertex_colors, tuple(sorted(self.arcs.items()))))

    def __repr__(self) -> str:
        return "ColoredDigraph(n=%d, vcolors=%d, acolors=%d, arcs=%d)" % (
            self.n, self.num_vertex_colors, self.num_arc_colors, len(self.arcs))


def _check_contiguous(colors: Sequence[int], kind: str, allow_empty: bool = False) -> None:
    if not colors:
        if allow_empty:
            return
        raise ValueError("no %s colors" % kind)
    used = set(colors)
    if used != set(range(max(used) + 1)):
        raise ValueError("%s colors are not contiguous from 0" % kind)


def relation_max_valency(pairs: Iterable[Pair]) -> int:
    """Maximum out-degree of a binary relation; 0 for the empty relation."""
    deg: dict[int, int] = {}
    for u, _ in pairs:
        deg[u] = deg.get(u, 0) + 1
    return max(deg.values(), default=0)


def maximal_valency(x: ColoredDigraph, s: int) -> int:
    """Maximum out-degree of arc-color class s."""
    if not 0 <= s < max(x.num_arc_colors, 1):
        raise ValueError("arc color %d out of range" % s)
    return relation_max_valency(x.arc_classes()[s]) if x.arcs else 0


def small_union(x: ColoredDigraph, k: int) -> set[Pair]:
    """Union of all arc-color classes of maximal valency at most k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out: set[Pair] = set()
    for s, cls in enumerate(x.arc_classes()):
        if relation_max_valency(cls) <= k:
            out.update(cls)
    return out


def _successors(pairs: Iterable[Pair], n: int) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        succ[u].append(v)
    return succ


def _reachable(succ: list[list[int]], source: int) -> set[int]:
    seen = {source}
    stack = [source]
    while stack:
        u = stack.pop()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_reachable_from(pairs: Iterable[Pair], n: int, source: int) -> bool:
    """Whether every vertex is reachable from source along the relation."""
    return len(_reachable(_successors(pairs, n), source)) == n


def is_strongly_connected(pairs: Iterable[Pair], n: int) -> bool:
    """Directed path from every vertex to every other."""
    if n == 1:
        return True
    pairs = list(pairs)
    if len(_reachable(_successors(pairs, n), 0)) != n:
        return False
    rev = [(v, u) for u, v in pairs]
    return len(_reachable(_successors(rev, n), 0)) == n


def is_k_spanning(x: ColoredDigraph, k: int, source: int | None = None) -> bool:
    """Whether the small-valency arc classes span x.

    With ``source=None`` the union must be strongly connected; otherwise
    every vertex must be reachable from ``source`` (the variant used by
    the isomorphism gadget).
    """
    rel = small_union(x, k)
    if source is None:
        return is_strongly_connected(rel, x.n)
    return is_reachable_from(rel, x.n, source)


def minimal_spanning_k(x: ColoredDigraph, source: int | None = None) -> int | None:
    """Smallest k for which x is k-spanning, or None if there is none."""
    valencies = sorted({max(1, relation_max_valency(cls)) for cls in x.arc_classes()})
    for k in valencies:
        if is_k_spanning(x, k, source):
            return k
    return None


@dataclass(frozen=True)
class InducedSubdigraph:
    """An induced substructure together with its back-maps to the original."""

    graph: ColoredDigraph
    vertices: tuple[int, ...]          # new index -> original vertex
    vertex_color_map: tuple[int, ...]  # new vertex color -> original color
    arc_color_map: tuple[int, ...]     # new arc color -> original color

    def original_vertex(self, v: int) -> int:
        return self.vertices[v]


def induced(x: ColoredDigraph, vertex_set: Iterable[int]) -> InducedSubdigraph:
    """Induced colored subdigraph on a vertex subset.

    Vertices are re-indexed in ascending original order; colors are
    compacted preserving their relative order.
    """
    verts = sorted(set(vertex_set))
    if not verts:
        raise ValueError("empty vertex subset")
    if verts[0] < 0 or verts[-1] >= x.n:
        raise ValueError("vertex out of range")
    rank = {v: i for i, v in enumerate(verts)}
    vmap = sorted({x.vertex_colors[v] for v in verts})
    vrank = {c: i for i, c in enumerate(vmap)}
    sub_arcs = {(rank[u], rank[v]): c
                for (u, v), c in x.arcs.items() if u in rank and v in rank}
    amap = sorted(set(sub_arcs.values()))
    arank = {c: i for i, c in enumerate(amap)}
    graph = ColoredDigraph(
        len(verts),
        [vrank[x.vertex_colors[v]] for v in verts],
        {pair: arank[c] for pair, c in sub_arcs.items()},
    )
    return InducedSubdigraph(graph, tuple(verts), tuple(vmap), tuple(amap))


def finer_or_equal_partitions(finer: ColoredDigraph, coarser: ColoredDigraph) -> bool:
    """Whether every class of ``coarser`` is a union of classes of ``finer``.

    Checked for both the vertex and the arc partition; the two digraphs
    must share a vertex set.  Only the partition half of the refinement
    order is decided here (automorphism equality is an oracle matter).
    """
    if finer.n != coarser.n:
        raise ValueError("vertex count mismatch")
    # each finer vertex class must sit inside one coarser class
    for cls in finer.vertex_classes():
        if len({coarser.vertex_colors[v] for v in cls}) != 1:
            return False
    if set(finer.arcs) != set(coarser.arcs):
        return False
    for cls in finer.arc_classes():
        if len({coarser.arcs[pair] for pair in cls}) != 1:
            return False
    return True


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set {0..m-1} with an ordered list of hyperedges."""

    m: int
    edges: tuple[frozenset[int], ...]

    def __init__(self, m: int, edges: Iterable[Iterable[int]]):
        uniq: list[frozenset[int]] = []
        seen = set()
        for e in edges:
            fe = frozenset(e)
            if any(not 0 <= v < m for v in fe):
                raise ValueError("hyperedge vertex out of range")
            if fe in seen:
                warnings.warn("duplicate hyperedge dropped", stacklevel=2)
                continue
            seen.add(fe)
            uniq.append(fe)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", tuple(uniq))

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.edges)
