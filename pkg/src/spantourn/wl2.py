"""Two-dimensional Weisfeiler-Leman refinement with an individualization family.

The refinement acts on ordered vertex pairs (including the diagonal).
Colors are renumbered canonically after every round by sorting the
defining signatures, so the output is deterministic and equivariant:
relabeling the input relabels the output identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .structures import ColoredDigraph

NON_ARC = -1


@dataclass(frozen=True)
class PairColoring:
    """Stable coloring of all ordered vertex pairs, plus the round count."""

    n: int
    colors: dict[tuple[int, int], int]
    rounds: int

    def num_colors(self) -> int:
        return max(self.colors.values()) + 1


def _rank(signatures: dict[tuple[int, int], object]) -> dict[tuple[int, int], int]:
    """Dense color ids by lexicographic signature rank (collision-free)."""
    order = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
    return {pair: order[sig] for pair, sig in signatures.items()}


def initial_coloring(x: ColoredDigraph, tau: Sequence[Iterable[int]]) -> PairColoring:
    """Round-0 coloring from vertex colors, arc colors and tau membership.

    Diagonal signatures sort before off-diagonal ones, and off-diagonal
    signatures sort primarily by the forward arc color, which keeps the
    derived vertex/arc classes grouped under the input partitions.
    """
    tau_sets = [frozenset(t) for t in tau]
    for t in tau_sets:
        if any(not 0 <= v < x.n for v in t):
            raise ValueError("tau subset out of range")
    member = [tuple(int(v in t) for t in tau_sets) for v in range(x.n)]
    m = x.color_matrix()
    vc = x.vertex_colors
    sigs: dict[tuple[int, int], object] = {}
    for u in range(x.n):
        sigs[(u, u)] = (0, vc[u], member[u])
        for v in range(x.n):
            if u != v:
                sigs[(u, v)] = (1, m[u][v], m[v][u], vc[u], vc[v],
                                member[u], member[v])
    return PairColoring(x.n, _rank(sigs), 0)


def iterate_round(coloring: PairColoring, x: ColoredDigraph) -> PairColoring:
    """One refinement round: new color of (u,v) is the old color plus the
    multiset over w of (color(u,w), color(w,v))."""
    n = coloring.n
    col = coloring.colors
    sigs: dict[tuple[int, int], object] = {}
    for u in range(n):
        for v in range(n):
            multiset = sorted((col[(u, w)], col[(w, v)]) for w in range(n))
            sigs[(u, v)] = (col[(u, v)], tuple(multiset))
    return PairColoring(n, _rank(sigs), coloring.rounds + 1)


def refine_to_stable(x: ColoredDigraph, tau: Sequence[Iterable[int]]) -> PairColoring:
    coloring = initial_coloring(x, tau)
    while True:
        nxt = iterate_round(coloring, x)
        if nxt.num_colors() == coloring.num_colors():
            # same partition; keep the pre-round numbering
            return coloring
        coloring = nxt


def wl2(x: ColoredDigraph, tau: Sequence[Iterable[int]] = ()) -> ColoredDigraph:
    """Refined colored digraph: vertex classes from diagonal colors, arc
    classes from off-diagonal colors restricted to actual arcs."""
    coloring = refine_to_stable(x, tau)
    col = coloring.colors
    diag = sorted({col[(v, v)] for v in range(x.n)})
    drank = {c: i for i, c in enumerate(diag)}
    arc_cols = sorted({col[pair] for pair in x.arcs})
    arank = {c: i for i, c in enumerate(arc_cols)}
    return ColoredDigraph(
        x.n,
        [drank[col[(v, v)]] for v in range(x.n)],
        {pair: arank[col[pair]] for pair in x.arcs},
    )
