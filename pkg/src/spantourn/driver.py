"""Automorphism groups and isomorphism cosets of k-spanning instances.

The driver grows an invariant vertex set Sigma from a starting vertex
class, carrying along an overgroup K of the automorphism restriction to
Sigma.  Each step picks a small-valency arc class leaving Sigma, runs
the block extension on it, and either merges the resulting Delta-action
into K or restarts from a strictly refined coloring.  The final answer
is the intersection of the solvable overgroup K with the automorphisms
of the digraph.

Isomorphism reduces to the automorphism routine through a three-part
gadget: two marked copies of X, one of Y, and an apex vertex whose
low-valency arcs point at one marked vertex per part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .extend import extend_action
from .perm import Coset, Perm, PermGroup, bsgs, restrict
from .search import aut_colored, aut_digraph_cap, subgroup_search, tournament_iso
from .structures import (ColoredDigraph, induced, is_k_spanning,
                         relation_max_valency)
from .wl2 import wl2

Pair = tuple[int, int]
Trace = Callable[[str], None] | None


@dataclass
class DriverStats:
    """Counters for one `aut_spanning` run."""

    restart_count: int = 0
    refinement_count: int = 0
    merge_count: int = 0


def find_spanning_classes(x: ColoredDigraph, k: int, sigma: set[int]):
    """First arc class of valency <= k leaving sigma, in color order.

    Returns (color, pairs, gamma, delta) where pairs are the class arcs
    from sigma to its complement and gamma/delta their sorted tail/head
    sets, or None when no small class leaves sigma.
    """
    for s, cls in enumerate(x.arc_classes()):
        if not cls or relation_max_valency(cls) > k:
            continue
        d = [(u, v) for (u, v) in cls if u in sigma and v not in sigma]
        if d:
            gamma = sorted({u for u, _ in d})
            delta = sorted({v for _, v in d})
            return s, d, gamma, delta
    return None


def _initial_class(x: ColoredDigraph, source: int | None) -> list[int]:
    classes = x.vertex_classes()
    if source is not None:
        if not 0 <= source < x.n:
            raise ValueError("source vertex out of range")
        return classes[x.vertex_colors[source]]
    c = min(range(len(classes)), key=lambda i: (len(classes[i]), i))
    return classes[c]


def _color_preserving(group: PermGroup, colors: list[int]) -> PermGroup:
    """Subgroup of elements preserving a color list positionwise."""
    if all(all(colors[g[i]] == colors[i] for i in range(len(colors)))
           for g in group.generators):
        return group
    return subgroup_search(
        group,
        lambda g: all(colors[g[i]] == colors[i] for i in range(len(colors))),
        lambda pts, imgs: colors[pts[-1]] == colors[imgs[-1]],
    )


def _lift_refinement(cur: ColoredDigraph, sub_vertices, refined: ColoredDigraph) -> ColoredDigraph:
    """Split cur's vertex classes along a refined coloring of a subset.

    Within each split class the cell holding the smallest member keeps
    the old color; the other cells get fresh colors appended at the end,
    ordered by (old color, refined color)."""
    loc = {v: refined.vertex_colors[i] for i, v in enumerate(sub_vertices)}
    p = cur.num_vertex_colors
    new_colors = list(cur.vertex_colors)
    nxt = p
    for cls in cur.vertex_classes():
        cells: dict[int, list[int]] = {}
        for v in cls:
            cells.setdefault(loc.get(v, -1), []).append(v)
        if len(cells) == 1:
            continue
        keep = min(cells, key=lambda c: min(cells[c]))
        for c in sorted(cells):
            if c == keep:
                continue
            for v in cells[c]:
                new_colors[v] = nxt
            nxt += 1
    if nxt == p:
        raise RuntimeError("refinement produced no vertex split")
    return ColoredDigraph(cur.n, new_colors, cur.arcs)


def _merge(kgrp: PermGroup, sigma: list[int], m: PermGroup, delta: list[int]):
    """Direct-product embedding of K (on sigma) and M (on delta) into the
    positions of sorted(sigma + delta)."""
    new_sigma = sorted(set(sigma) | set(delta))
    pos = {v: i for i, v in enumerate(new_sigma)}
    size = len(new_sigma)
    gens: list[Perm] = []
    for part, grp in ((sigma, kgrp), (delta, m)):
        for g in grp.generators:
            img = list(range(size))
            for i, v in enumerate(part):
                img[pos[v]] = pos[part[g[i]]]
            gens.append(Perm(img))
    return bsgs(gens, size), new_sigma


def _pass(cur: ColoredDigraph, k: int, source: int | None,
          trace: Trace, stats: DriverStats):
    """One growth pass over a stably colored digraph.

    Returns either a PermGroup on all n points (sigma reached everything)
    or a strictly refined ColoredDigraph to restart from.
    """
    n = cur.n
    sigma = sorted(_initial_class(cur, source))
    ind = induced(cur, sigma)
    if ind.graph.is_tournament():
        kgrp = tournament_iso(ind.graph, ind.graph).group
    else:
        kgrp = aut_colored(ind.graph)
    sigma_set = set(sigma)
    while len(sigma) < n:
        found = find_spanning_classes(cur, k, sigma_set)
        if found is None:
            raise ValueError("arc classes of valency <= %d do not span" % k)
        s, d, gamma, delta = found
        if trace:
            trace("block: color %d, |gamma|=%d, |delta|=%d, |sigma|=%d"
                  % (s, len(gamma), len(delta), len(sigma)))
        sub = induced(cur, gamma + delta)
        loc = {v: i for i, v in enumerate(sub.vertices)}
        gamma_set = set(gamma)
        gpos = [i for i, v in enumerate(sigma) if v in gamma_set]
        try:
            kg = restrict(kgrp, gpos)
        except ValueError:
            kgrp = _color_preserving(kgrp, [cur.vertex_colors[v] for v in sigma])
            kg = restrict(kgrp, gpos)
        out = extend_action(sub.graph,
                            [loc[v] for v in gamma],
                            [loc[v] for v in delta],
                            [(loc[u], loc[v]) for u, v in d],
                            kg)
        if out.is_refined:
            stats.refinement_count += 1
            if trace:
                trace("refined: splitting classes and restarting")
            return _lift_refinement(cur, sub.vertices, out.refined)
        stats.merge_count += 1
        kgrp, sigma = _merge(kgrp, sigma, out.image_group, delta)
        sigma_set = set(sigma)
    return kgrp


def aut_spanning(x: ColoredDigraph, k: int, source: int | None = None,
                 trace: Trace = None, stats: DriverStats | None = None) -> PermGroup:
    """Automorphism group of a k-spanning colored digraph.

    With ``source`` given, spanning means reachability of every vertex
    from ``source`` along the small-valency classes, and the growth
    starts from the source's vertex class.  ``stats``, if supplied, is
    filled with restart/refinement/merge counters; ``trace`` receives
    progress lines.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_k_spanning(x, k, source):
        raise ValueError("input is not %d-spanning" % k)
    if stats is None:
        stats = DriverStats()
    n = x.n
    cur = x
    stabilized = False
    while True:
        stats.restart_count += 1
        if stats.restart_count > n * n:
            raise RuntimeError("refinement budget of n^2 restarts exceeded")
        sigma0 = _initial_class(cur, source)
        if len(sigma0) == n:
            # a single class: no growth needed, go straight to the cap
            kgrp = _pass(cur, k, source, trace, stats)
            break
        if not stabilized:
            cur = wl2(cur)
            stabilized = True
            continue
        result = _pass(cur, k, source, trace, stats)
        if isinstance(result, ColoredDigraph):
            cur = wl2(result)
            continue
        kgrp = result
        break
    if trace:
        trace("cap: |K| = %d on %d points" % (kgrp.order(), n))
    return aut_digraph_cap(cur, kgrp)


# ---------------------------------------------------------------------------
# isomorphism via the three-part gadget


def build_gadget(x: ColoredDigraph, y: ColoredDigraph, beta: int) -> ColoredDigraph:
    """Gadget on 3n+1 vertices for testing isomorphisms sending 0 to beta.

    Parts: X on 0..n-1, Y on n..2n-1, a second X copy on 2n..3n-1, and
    an apex mu = 3n.  All part-internal arcs keep their colors; the
    full bipartite one-way rings X->Y->X'->X get one fresh color; the
    apex points at the marked triple (0, n+beta, 2n) with a second fresh
    color and at everything else with a third.
    """
    n = x.n
    if y.n != n or not 0 <= beta < n:
        raise ValueError("mismatched sizes or beta out of range")
    if (x.num_vertex_colors != y.num_vertex_colors
            or x.num_arc_colors != y.num_arc_colors):
        raise ValueError("gadget needs identical color palettes")
    q = x.num_arc_colors
    p = x.num_vertex_colors
    mu = 3 * n
    vcolors = (list(x.vertex_colors) + list(y.vertex_colors)
               + list(x.vertex_colors) + [p])
    arcs: dict[Pair, int] = {}
    for (u, v), c in x.arcs.items():
        arcs[(u, v)] = c
        arcs[(u + 2 * n, v + 2 * n)] = c
    for (u, v), c in y.arcs.items():
        arcs[(u + n, v + n)] = c
    for i in range(n):
        for j in range(n):
            arcs[(i, n + j)] = q
            arcs[(n + i, 2 * n + j)] = q
            arcs[(2 * n + i, j)] = q
    marked = {0, n + beta, 2 * n}
    for v in range(3 * n):
        arcs[(mu, v)] = q + 1 if v in marked else q + 2
    return ColoredDigraph(3 * n + 1, vcolors, arcs)


def triple_cycle_coset(group: PermGroup, a: int, b: int, c: int) -> Coset:
    """Coset of elements acting as the cycle a -> b -> c -> a.

    Peels the requirement off the stabilizer chain a, b, c by chaining
    transversal representatives; empty when any step has no witness.
    """
    t1 = group.orbit_transversal(a)
    if b not in t1:
        return Coset.empty()
    u1 = t1[b]
    s1 = group.point_stabilizer(a)
    t2 = s1.orbit_transversal(b)
    target2 = (~u1)[c]
    if target2 not in t2:
        return Coset.empty()
    u2 = t2[target2]
    s2 = s1.point_stabilizer(b)
    t3 = s2.orbit_transversal(c)
    target3 = (~(u2 * u1))[a]
    if target3 not in t3:
        return Coset.empty()
    u3 = t3[target3]
    return Coset(u3 * u2 * u1, s2.point_stabilizer(c))


def gadget_part_coset(gadget_coset: Coset, n: int) -> Coset:
    """Restrict a gadget coset of X-part-to-Y-part maps to maps of 0..n-1.

    Every element must send the first part onto the second; the result
    acts on n points with the Y part renumbered back to 0..n-1."""
    if gadget_coset.is_empty:
        return Coset.empty()

    def to_part_map(g: Perm) -> Perm:
        images = [g[v] - n for v in range(n)]
        if any(not 0 <= w < n for w in images):
            raise ValueError("element does not map the X part onto the Y part")
        return Perm(images)

    rep = to_part_map(gadget_coset.rep)
    gens = []
    for g in gadget_coset.group.generators:
        images = [g[v] for v in range(n)]
        if any(not 0 <= w < n for w in images):
            raise ValueError("group does not preserve the X part")
        gens.append(Perm(images))
    return Coset(rep, bsgs(gens, n))


def iso_spanning(x: ColoredDigraph, y: ColoredDigraph, k: int,
                 trace: Trace = None) -> Coset:
    """ISO(X, Y) as the right coset Aut(X) * rep, for k-spanning inputs.

    Tries each possible image beta of vertex 0: the gadget for beta has
    an automorphism cycling its marked triple exactly when some
    isomorphism maps 0 to beta, and the X-part restriction of any such
    automorphism is one.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for g in (x, y):
        if not is_k_spanning(g, k):
            raise ValueError("input is not %d-spanning" % k)
    n = x.n
    if (y.n != n
            or x.num_vertex_colors != y.num_vertex_colors
            or x.num_arc_colors != y.num_arc_colors
            or [len(c) for c in x.vertex_classes()] != [len(c) for c in y.vertex_classes()]
            or [len(c) for c in x.arc_classes()] != [len(c) for c in y.arc_classes()]):
        return Coset.empty()
    mu = 3 * n
    kp = max(3, k)
    for beta in range(n):
        if trace:
            trace("gadget: trying beta = %d" % beta)
        t = build_gadget(x, y, beta)
        a = aut_spanning(t, kp, source=mu)
        cyc = triple_cycle_coset(a, 0, n + beta, 2 * n)
        if cyc.is_empty:
            continue
        rep = Perm([cyc.rep[v] - n for v in range(n)])
        return Coset(rep, aut_spanning(x, k))
    return Coset.empty()
