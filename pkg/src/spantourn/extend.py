"""Extending a group action across a bipartite block, or refining.

Given a colored digraph with two vertex-color classes Gamma and Delta,
an arc set D inside Gamma x Delta whose Delta-side induces tournaments,
and an overgroup K of the action on Gamma, this module either

* detects that the local tournaments X(gamma) fall into more than one
  isomorphism class and returns a strictly refined coloring, or
* builds the wreath-type group W on D, intersects it with the
  automorphisms of the pair hypergraph, and returns the resulting group
  L on D together with its induced action on Delta, which contains the
  restriction of every automorphism of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import BlockAction, Perm, PermGroup, bsgs, induced_action
from .search import aut_colored, aut_hypergraph_cap, iso_rep
from .structures import (ColoredDigraph, Hypergraph, InducedSubdigraph,
                         induced, relation_max_valency)
from .wl2 import wl2

Pair = tuple[int, int]


@dataclass(frozen=True)
class BipartiteBlock:
    """A nonempty pair set D inside Gamma x Delta, with its max out-degree.

    Equal out-neighborhood sizes across Gamma are not required here;
    they only become guaranteed once all local tournaments are pairwise
    isomorphic.
    """

    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    pairs: tuple[Pair, ...]
    k: int

    @classmethod
    def build(cls, gamma, delta, pairs) -> "BipartiteBlock":
        gamma = tuple(sorted(gamma))
        delta = tuple(sorted(delta))
        gset, dset = set(gamma), set(delta)
        if gset & dset:
            raise ValueError("gamma and delta must be disjoint")
        pairs = tuple(sorted(set(pairs)))
        if not pairs:
            raise ValueError("empty pair set")
        for u, v in pairs:
            if u not in gset or v not in dset:
                raise ValueError("pair (%d,%d) outside gamma x delta" % (u, v))
        return cls(gamma, delta, pairs, relation_max_valency(pairs))

    def out_neighbors(self, g: int) -> list[int]:
        return sorted(v for u, v in self.pairs if u == g)


def local_tournament(x: ColoredDigraph, g: int, pairs) -> InducedSubdigraph:
    """Induced colored tournament on the D-out-neighborhood of gamma-vertex g."""
    nbrs = sorted(v for u, v in pairs if u == g)
    if not nbrs:
        raise ValueError("vertex %d has no out-neighbors in the pair set" % g)
    sub = induced(x, nbrs)
    if not sub.graph.is_tournament():
        raise ValueError("out-neighborhood of %d does not induce a tournament" % g)
    return sub


@dataclass(frozen=True)
class IsoFamily:
    """Representative isomorphisms from a reference local tournament.

    ``reps[g]`` maps positions of the local tournament at ``gamma0`` to
    positions of the one at ``g`` (identity at ``gamma0`` itself); any
    needed coset H(g, g') is Aut(X(gamma0))-translated through these.
    """

    gamma0: int
    base_group: PermGroup
    reps: dict[int, Perm]


def iso_family(x: ColoredDigraph, block: BipartiteBlock):
    """Partition Gamma by local-tournament isomorphism; returns the family
    for the class of the reference vertex plus the full partition.

    Vertices with empty out-neighborhood get singleton cells of their own
    (there is no tournament to compare).  Cells are ordered by smallest
    member.
    """
    locals_: dict[int, InducedSubdigraph] = {}
    for g in block.gamma:
        nbrs = block.out_neighbors(g)
        if nbrs:
            locals_[g] = local_tournament(x, g, block.pairs)

    cells: list[list[int]] = []
    refs: list[int] = []
    rep_maps: dict[int, dict[int, Perm]] = {}
    for g in block.gamma:
        if g not in locals_:
            cells.append([g])
            refs.append(g)
            continue
        placed = False
        for ref, cell in zip(refs, cells):
            if ref not in locals_:
                continue
            a, b = locals_[ref], locals_[g]
            if (a.vertex_color_map != b.vertex_color_map
                    or a.arc_color_map != b.arc_color_map
                    or a.graph.n != b.graph.n):
                continue
            rep = iso_rep(a.graph, b.graph)
            if rep is not None:
                cell.append(g)
                rep_maps[ref][g] = rep
                placed = True
                break
        if not placed:
            cells.append([g])
            refs.append(g)
            rep_maps[g] = {g: Perm.identity(locals_[g].graph.n)}

    pi = [frozenset(c) for c in cells]
    gamma0 = next((g for g in block.gamma if g in locals_), None)
    family = None
    if gamma0 is not None:
        family = IsoFamily(gamma0, aut_colored(locals_[gamma0].graph),
                           rep_maps[gamma0])
    return family, pi


def wreath_group(block: BipartiteBlock, family: IsoFamily, k: PermGroup) -> PermGroup:
    """The group W on D generated by per-fiber copies of Aut(X(gamma0))
    and by lifts of K's generators through the representative system.

    Permutationally isomorphic to Aut(X(gamma0)) wr K; the order equals
    |Aut(X(gamma0))|^|Gamma| * |K| exactly.
    """
    gamma = block.gamma
    if set(family.reps) != set(gamma):
        raise ValueError("wreath construction needs one isomorphism class")
    if k.degree != len(gamma):
        raise ValueError("K must act on gamma positions")
    idx = {p: i for i, p in enumerate(block.pairs)}
    nbrs = {g: block.out_neighbors(g) for g in gamma}
    h = {g: family.reps[g].images for g in gamma}
    h_inv = {g: (~family.reps[g]).images for g in gamma}
    m = len(block.pairs)

    gens: list[Perm] = []
    # per-fiber copies of the base group, conjugated into each fiber
    for g in gamma:
        for u in family.base_group.generators:
            images = list(range(m))
            for j, delta in enumerate(nbrs[g]):
                jp = h[g][u[h_inv[g][j]]]
                images[idx[(g, delta)]] = idx[(g, nbrs[g][jp])]
            gens.append(Perm(images))
    # lifts of K's generators: fiber g moves to fiber g^K via gamma0
    for p in k.generators:
        images = list(range(m))
        for a, g in enumerate(gamma):
            gp = gamma[p[a]]
            for j, delta in enumerate(nbrs[g]):
                jp = h[gp][h_inv[g][j]]
                images[idx[(g, delta)]] = idx[(gp, nbrs[gp][jp])]
        gens.append(Perm(images))
    return bsgs(gens, m)


def pair_hypergraph(block: BipartiteBlock) -> Hypergraph:
    """Hypergraph on D with one hyperedge per covered Delta-vertex: the set
    of pairs sharing that second coordinate.  The hyperedges partition D."""
    groups: dict[int, list[int]] = {}
    for i, (_, d) in enumerate(block.pairs):
        groups.setdefault(d, []).append(i)
    return Hypergraph(len(block.pairs), [groups[d] for d in sorted(groups)])


@dataclass(frozen=True)
class AuxOutput:
    """Either a strictly refined digraph, or (L, action-on-Delta)."""

    refined: ColoredDigraph | None = None
    l_group: PermGroup | None = None
    action: BlockAction | None = None
    deltas: tuple[int, ...] | None = None

    @property
    def is_refined(self) -> bool:
        return self.refined is not None

    @property
    def image_group(self) -> PermGroup:
        """The image of L on Delta positions (ascending Delta order)."""
        return self.action.group


def extend_action(x: ColoredDigraph, gamma, delta, pairs, k: PermGroup) -> AuxOutput:
    """Run the block step: refine if the local tournaments disagree (or if
    part of Delta has no incoming D-arc), else build L and its Delta action.

    ``k`` acts on the positions of sorted gamma and must contain the
    restriction of Aut(x) to gamma (the caller's responsibility)."""
    block = BipartiteBlock.build(gamma, delta, pairs)
    family, pi = iso_family(x, block)
    if len(pi) > 1:
        return AuxOutput(refined=wl2(x, [sorted(c) for c in pi]))
    covered = sorted({d for _, d in block.pairs})
    if covered != list(block.delta):
        # an uncovered Delta-part is an invariant distinction: split it off
        return AuxOutput(refined=wl2(x, [covered]))
    w = wreath_group(block, family, k)
    h = pair_hypergraph(block)
    l_group = aut_hypergraph_cap(h, w)
    groups: dict[int, list[int]] = {}
    for i, (_, d) in enumerate(block.pairs):
        groups.setdefault(d, []).append(i)
    action = induced_action(l_group, [groups[d] for d in sorted(groups)])
    return AuxOutput(l_group=l_group, action=action, deltas=tuple(sorted(groups)))
