"""Automorphism and isomorphism searches.

Three layers live here:

* brute-force oracles (`brute_aut`, `brute_iso`) that enumerate all
  vertex-color-respecting bijections, used as ground truth in tests;
* a deterministic stabilizer-chain search (`aut_colored`, `iso_rep`,
  `tournament_iso`) for colored digraph automorphisms/isomorphisms;
* group-constrained searches (`aut_digraph_cap`, `aut_hypergraph_cap`)
  that walk the base-image tree of a solvable group's BSGS.

All searches visit children in ascending point order and are fully
deterministic.  Backtrack nodes are counted in ``STATS``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .perm import Coset, Perm, PermGroup, bsgs, is_solvable, trivial_group
from .structures import ColoredDigraph, Hypergraph

DEFAULT_ORACLE_CAP = 9


@dataclass
class SearchStats:
    nodes: int = 0

    def reset(self) -> None:
        self.nodes = 0


STATS = SearchStats()


def _oracle_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get("SPANTOURN_ORACLE_CAP", DEFAULT_ORACLE_CAP))


# ---------------------------------------------------------------------------
# brute-force oracles


def _brute_maps(x: ColoredDigraph, y: ColoredDigraph) -> list[Perm]:
    """All color-preserving isomorphisms x -> y by exhaustive assignment.

    Depth-first over vertices 0..n-1; a branch dies as soon as a vertex
    color or an arc color against an already-assigned vertex mismatches,
    which enumerates exactly the n! candidate bijections implicitly.
    """
    if x.n != y.n or x.num_vertex_colors != y.num_vertex_colors \
            or x.num_arc_colors != y.num_arc_colors:
        return []
    n = x.n
    mx, my = x.color_matrix(), y.color_matrix()
    vcx, vcy = x.vertex_colors, y.vertex_colors
    found: list[Perm] = []
    image = [0] * n
    used = [False] * n

    def rec(v: int) -> None:
        if v == n:
            found.append(Perm(image))
            return
        for w in range(n):
            if used[w] or vcy[w] != vcx[v]:
                continue
            row_x, col_w = mx[v], my[w]
            ok = True
            for u in range(v):
                iu = image[u]
                if mx[u][v] != my[iu][w] or row_x[u] != col_w[iu]:
                    ok = False
                    break
            if ok:
                used[w] = True
                image[v] = w
                rec(v + 1)
                used[w] = False
        return

    rec(0)
    return found


def brute_iso(x: ColoredDigraph, y: ColoredDigraph, cap: int | None = None) -> list[Perm]:
    """Ground-truth list of all isomorphisms x -> y."""
    limit = _oracle_cap(cap)
    if x.n > limit or y.n > limit:
        raise ValueError("instance size %d exceeds oracle cap %d" % (max(x.n, y.n), limit))
    return _brute_maps(x, y)


def brute_aut(x: ColoredDigraph, cap: int | None = None) -> PermGroup:
    """Ground-truth automorphism group by exhaustive enumeration."""
    limit = _oracle_cap(cap)
    if x.n > limit:
        raise ValueError("instance size %d exceeds oracle cap %d" % (x.n, limit))
    return bsgs(_brute_maps(x, x), x.n)


# ---------------------------------------------------------------------------
# stabilizer-chain automorphism search


def _complete_map(x: ColoredDigraph, fixed: int, w: int) -> Perm | None:
    """Any automorphism fixing 0..fixed-1 pointwise and sending fixed -> w."""
    n = x.n
    m = x.color_matrix()
    vc = x.vertex_colors
    image = list(range(fixed)) + [0] * (n - fixed)
    used = [False] * n
    for i in range(fixed):
        used[i] = True
    image[fixed] = w
    used[w] = True

    def rec(v: int) -> bool:
        if v == n:
            return True
        STATS.nodes += 1
        for cand in range(n):
            if used[cand] or vc[cand] != vc[v]:
                continue
            ok = True
            for u in range(v):
                iu = image[u]
                if m[u][v] != m[iu][cand] or m[v][u] != m[cand][iu]:
                    ok = False
                    break
            if ok:
                used[cand] = True
                image[v] = cand
                if rec(v + 1):
                    return True
                used[cand] = False
        return False

    if rec(fixed + 1):
        return Perm(image)
    return None


def _orbit_of(point: int, gens: list[Perm], n: int) -> set[int]:
    orb = {point}
    stack = [point]
    while stack:
        a = stack.pop()
        for g in gens:
            b = g[a]
            if b not in orb:
                orb.add(b)
                stack.append(b)
    return orb


def aut_colored(x: ColoredDigraph) -> PermGroup:
    """Automorphism group of a colored digraph.

    Works down the point stabilizer chain for the base 0,1,...,n-1:
    at level d it looks for automorphisms fixing 0..d-1 and moving d,
    skipping images already in the orbit of d under generators found so
    far (they yield no new group elements).
    """
    n = x.n
    m = x.color_matrix()
    vc = x.vertex_colors
    gens: list[Perm] = []
    for d in range(n - 1, -1, -1):
        orbit = _orbit_of(d, gens, n)
        for w in range(d + 1, n):
            if w in orbit or vc[w] != vc[d]:
                continue
            ok = True
            for i in range(d):
                if m[i][d] != m[i][w] or m[d][i] != m[w][i]:
                    ok = False
                    break
            if not ok:
                continue
            g = _complete_map(x, d, w)
            if g is not None:
                gens.append(g)
                orbit = _orbit_of(d, gens, n)
    return bsgs(gens, n)


def iso_rep(x: ColoredDigraph, y: ColoredDigraph) -> Perm | None:
    """First color-preserving isomorphism x -> y in lexicographic image
    order, or None."""
    if x.n != y.n or x.num_vertex_colors != y.num_vertex_colors \
            or x.num_arc_colors != y.num_arc_colors:
        return None
    if sorted(map(len, x.vertex_classes())) != sorted(map(len, y.vertex_classes())):
        return None
    n = x.n
    mx, my = x.color_matrix(), y.color_matrix()
    vcx, vcy = x.vertex_colors, y.vertex_colors
    image = [0] * n
    used = [False] * n

    def rec(v: int) -> bool:
        if v == n:
            return True
        STATS.nodes += 1
        for w in range(n):
            if used[w] or vcy[w] != vcx[v]:
                continue
            ok = True
            for u in range(v):
                iu = image[u]
                if mx[u][v] != my[iu][w] or mx[v][u] != my[w][iu]:
                    ok = False
                    break
            if ok:
                used[w] = True
                image[v] = w
                if rec(v + 1):
                    return True
                used[w] = False
        return False

    return Perm(image) if rec(0) else None


def tournament_iso(t: ColoredDigraph, tp: ColoredDigraph) -> Coset:
    """ISO(T, T') as the right coset Aut(T) * rep, or the empty coset."""
    if not t.is_tournament() or not tp.is_tournament():
        raise ValueError("tournament_iso requires colored tournaments")
    if t == tp:
        rep: Perm | None = Perm.identity(t.n)
    else:
        rep = iso_rep(t, tp)
    if rep is None:
        return Coset.empty()
    return Coset(rep, aut_colored(t))


# ---------------------------------------------------------------------------
# group-constrained searches over a BSGS base-image tree


def subgroup_search(k: PermGroup, accept, partial=None) -> PermGroup:
    """Subgroup {g in K : accept(g)} of K, for a subgroup property `accept`.

    Walks the tree of base images of K's stabilizer chain depth first,
    in ascending image order.  `partial(points, images)` may reject a
    node from the images of the base prefix alone (it sees the full
    prefix, the last entry being the newly determined one).  At the top
    level, images lying in the orbit of the first base point under the
    subgroup found so far are skipped; together with full enumeration of
    the deeper levels this yields a generating set.
    """
    chain = k.chain
    degree = k.degree
    if not chain:
        return trivial_group(degree)
    found: list[Perm] = []
    b0 = chain[0][0]
    base_pts = [b for b, _ in chain]
    # orbit of b0 under the subgroup found so far, refreshed lazily
    state = {"orbit": {b0}, "n_gens": 0}

    def descend(i: int, acc: Perm, imgs: list[int]) -> None:
        if i == len(chain):
            if accept(acc):
                found.append(acc)
            return
        b, trans = chain[i]
        for beta in sorted(trans):
            STATS.nodes += 1
            nxt = trans[beta] * acc
            img = nxt[b]
            if i == 0:
                if len(found) != state["n_gens"]:
                    state["orbit"] = _orbit_of(b0, found, degree)
                    state["n_gens"] = len(found)
                if img != b0 and img in state["orbit"]:
                    continue
            imgs.append(img)
            if partial is None or partial(base_pts[: i + 1], imgs):
                descend(i + 1, nxt, imgs)
            imgs.pop()

    descend(0, Perm.identity(degree), [])
    return bsgs(found, degree)


def aut_digraph_cap(x: ColoredDigraph, k: PermGroup) -> PermGroup:
    """Aut(X) ∩ K for a solvable group K on the vertex set of X."""
    if k.degree != x.n:
        raise ValueError("group degree differs from vertex count")
    if not is_solvable(k):
        raise ValueError("aut_digraph_cap requires a solvable group")
    m = x.color_matrix()
    vc = x.vertex_colors
    use_np = x.n >= 32
    if use_np:
        import numpy as np
        mnp = x.np_matrix()
        idx = np.arange(x.n)

    def accept(g: Perm) -> bool:
        for v in range(x.n):
            if vc[g[v]] != vc[v]:
                return False
        if use_np:
            garr = np.asarray(g.images)
            return bool(np.array_equal(mnp[np.ix_(garr, garr)], mnp))
        gi = g.images
        for u in range(x.n):
            mu, mgu = m[u], m[gi[u]]
            for v in range(x.n):
                if mu[v] != mgu[gi[v]]:
                    return False
        return True

    def partial(pts: list[int], imgs: list[int]) -> bool:
        p, q = pts[-1], imgs[-1]
        if vc[p] != vc[q]:
            return False
        for pj, qj in zip(pts[:-1], imgs[:-1]):
            if m[pj][p] != m[qj][q] or m[p][pj] != m[q][qj]:
                return False
        return True

    return subgroup_search(k, accept, partial)


def aut_hypergraph_cap(h: Hypergraph, k: PermGroup) -> PermGroup:
    """Aut(H) ∩ K: the members of solvable K permuting the hyperedge set."""
    if k.degree != h.m:
        raise ValueError("group degree differs from hypergraph vertex count")
    if not is_solvable(k):
        raise ValueError("aut_hypergraph_cap requires a solvable group")
    edge_set = h.edge_set()
    sizes: list[list[int]] = [[] for _ in range(h.m)]
    for e in h.edges:
        for v in e:
            sizes[v].append(len(e))
    sig = [tuple(sorted(s)) for s in sizes]

    def accept(g: Perm) -> bool:
        gi = g.images
        for e in h.edges:
            if frozenset(gi[v] for v in e) not in edge_set:
                return False
        return True

    def partial(pts: list[int], imgs: list[int]) -> bool:
        return sig[pts[-1]] == sig[imgs[-1]]

    return subgroup_search(k, accept, partial)
