"""Permutations and permutation groups.

Points act on the right throughout: ``x ^ (p * q) == (x ^ p) ^ q``, i.e.
``p * q`` applies ``p`` first.  Groups are stored as generators plus a
base-and-strong-generating-set (BSGS) built by a deterministic
Schreier-Sims procedure, which makes membership, order, orbits and
stabilizers cheap.  Group orders are plain Python ints (arbitrary
precision); serialize them as decimal strings.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Perm:
    """A permutation of {0..n-1}, stored as its image list."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images are not a bijection on 0..n-1")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        # apply self first, then other
        if other.degree != self.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        oi = other.images
        p = Perm.__new__(Perm)
        p.images = tuple(oi[i] for i in self.images)
        return p

    def __invert__(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        p = Perm.__new__(Perm)
        p.images = tuple(inv)
        return p

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def min_moved(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_str(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def to_line(self) -> str:
        return "p: " + " ".join(map(str, self.images))

    @classmethod
    def from_line(cls, line: str) -> "Perm":
        body = line.strip()
        if body.startswith("p:"):
            body = body[2:]
        return cls(int(tok) for tok in body.split())

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return "Perm[%d] %s" % (self.degree, self.cycle_str())


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return p * q


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {}

    def rebuild(self, degree: int) -> None:
        ident = Perm.identity(degree)
        trans = {self.base: ident}
        queue = [self.base]
        while queue:
            b = queue.pop(0)
            u = trans[b]
            for s in self.gens:
                c = s[b]
                if c not in trans:
                    trans[c] = u * s
                    queue.append(c)
        self.transversal = trans


class PermGroup:
    """Permutation group with a BSGS; construct through :func:`bsgs`."""

    def __init__(self, degree: int, generators: Sequence[Perm], chain: list[_Level]):
        self.degree = degree
        self.generators = tuple(generators)
        self._chain = chain

    @property
    def chain(self) -> list[tuple[int, dict[int, Perm]]]:
        """Stabilizer chain as (base point, transversal) pairs."""
        return [(lvl.base, lvl.transversal) for lvl in self._chain]

    def base(self) -> list[int]:
        return [lvl.base for lvl in self._chain]

    def order(self) -> int:
        n = 1
        for lvl in self._chain:
            n *= len(lvl.transversal)
        return n

    def is_trivial(self) -> bool:
        return not self._chain

    def sift(self, p: Perm) -> Perm:
        """Reduce p through the chain; identity result means membership."""
        for lvl in self._chain:
            b = p[lvl.base]
            u = lvl.transversal.get(b)
            if u is None:
                return p
            p = p * ~u
        return p

    def __contains__(self, p: Perm) -> bool:
        if p.degree != self.degree:
            return False
        return self.sift(p).is_identity()

    def orbit(self, x: int) -> list[int]:
        """Sorted orbit of x under the group."""
        return sorted(self.orbit_transversal(x))

    def orbit_transversal(self, x: int) -> dict[int, Perm]:
        """Map from each orbit point y to some u in G with x^u = y."""
        if not 0 <= x < self.degree:
            raise ValueError("point %d out of range" % x)
        trans = {x: Perm.identity(self.degree)}
        queue = [x]
        while queue:
            b = queue.pop(0)
            u = trans[b]
            for s in self.generators:
                c = s[b]
                if c not in trans:
                    trans[c] = u * s
                    queue.append(c)
        return trans

    def point_stabilizer(self, x: int) -> "PermGroup":
        """Stabilizer of x, generated by Schreier generators."""
        trans = self.orbit_transversal(x)
        gens = []
        for b in sorted(trans):
            u = trans[b]
            for s in self.generators:
                sg = u * s * ~trans[s[b]]
                if not sg.is_identity():
                    gens.append(sg)
        return bsgs(gens, self.degree)

    def elements(self) -> Iterator[Perm]:
        """All group elements (product of transversal representatives)."""
        chain = self._chain

        def rec(i: int, acc: Perm) -> Iterator[Perm]:
            if i == len(chain):
                yield acc
                return
            for b in sorted(chain[i].transversal):
                yield from rec(i + 1, chain[i].transversal[b] * acc)

        yield from rec(0, Perm.identity(self.degree))

    def __repr__(self) -> str:
        return "PermGroup(degree=%d, order=%d, gens=%d)" % (
            self.degree, self.order(), len(self.generators))


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, (), [])


def bsgs(generators: Iterable[Perm], degree: int | None = None) -> PermGroup:
    """Build a group with BSGS from generators (deterministic Schreier-Sims).

    Base points are chosen as the minimal moved point at each new level,
    which is deterministic; no randomization is used anywhere.
    """
    gens = [g for g in generators if not g.is_identity()]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError("degree mismatch among generators")

    chain: list[_Level] = []

    def sift_from(i: int, p: Perm) -> tuple[Perm, int]:
        for j in range(i, len(chain)):
            lvl = chain[j]
            u = lvl.transversal.get(p[lvl.base])
            if u is None:
                return p, j
            p = p * ~u
        return p, len(chain)

    def add_at(j: int, r: Perm) -> None:
        if j == len(chain):
            chain.append(_Level(r.min_moved()))
        # r fixes the bases above level j, so it generates every level <= j
        for i in range(j + 1):
            chain[i].gens.append(r)
            chain[i].rebuild(degree)

    for g in gens:
        r, i = sift_from(0, g)
        if not r.is_identity():
            add_at(i, r)

    # Close under Schreier generators: rescan until every Schreier
    # generator of every level sifts to the identity below it.
    changed = True
    while changed:
        changed = False
        for i, lvl in enumerate(chain):
            for b in sorted(lvl.transversal):
                u = lvl.transversal[b]
                for s in lvl.gens:
                    sg = u * s * ~lvl.transversal[s[b]]
                    if sg.is_identity():
                        continue
                    r, j = sift_from(i + 1, sg)
                    if not r.is_identity():
                        add_at(j, r)
                        changed = True
            if changed:
                break

    return PermGroup(degree, gens, chain)


def is_solvable(group: PermGroup, max_depth: int = 64) -> bool:
    """Whether the derived series reaches the trivial group."""
    g = group
    for _ in range(max_depth):
        if g.order() == 1:
            return True
        d = _derived_subgroup(g)
        if d.order() == g.order():
            return False
        g = d
    raise RuntimeError("derived series did not stabilize within %d steps" % max_depth)


def _derived_subgroup(group: PermGroup) -> PermGroup:
    """Normal closure of the commutators of generator pairs."""
    comms = []
    gens = group.generators
    for a in gens:
        for b in gens:
            c = ~a * ~b * a * b
            if not c.is_identity():
                comms.append(c)
    closure = bsgs(comms, group.degree)
    queue = list(comms)
    current = list(comms)
    while queue:
        c = queue.pop()
        for g in gens:
            cg = ~g * c * g
            if cg not in closure:
                current.append(cg)
                queue.append(cg)
                closure = bsgs(current, group.degree)
    return closure


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union 0..degG+degH-1."""
    n, m = g.degree, h.degree
    gens = []
    tail = tuple(range(n, n + m))
    for p in g.generators:
        gens.append(Perm(p.images + tail))
    head = tuple(range(n))
    for p in h.generators:
        gens.append(Perm(head + tuple(x + n for x in p.images)))
    return bsgs(gens, n + m)


def restrict(group: PermGroup, points: Sequence[int]) -> PermGroup:
    """Restriction to an invariant point set, re-indexed by its sorted order."""
    pts = sorted(set(points))
    rank = {x: i for i, x in enumerate(pts)}
    gens = []
    for p in group.generators:
        for x in pts:
            if p[x] not in rank:
                raise ValueError("point set is not invariant under the group")
        gens.append(Perm(rank[p[x]] for x in pts))
    return bsgs(gens, len(pts))


class BlockAction:
    """Induced action of a group on an ordered family of disjoint blocks.

    Holds the image group together with the generator-image table; any
    member of the source group can be mapped through :meth:`apply`.
    """

    def __init__(self, source: PermGroup, blocks: Sequence[Sequence[int]]):
        self.blocks = [tuple(sorted(b)) for b in blocks]
        seen: set[int] = set()
        self._block_of: dict[int, int] = {}
        for i, blk in enumerate(self.blocks):
            if not blk:
                raise ValueError("empty block")
            if seen & set(blk):
                raise ValueError("blocks are not disjoint")
            seen |= set(blk)
            for x in blk:
                self._block_of[x] = i
        self.source = source
        self.gen_images = tuple(self.apply(g) for g in source.generators)
        self.group = bsgs(self.gen_images, len(self.blocks))

    def apply(self, p: Perm) -> Perm:
        """Block permutation induced by p (p must permute the family)."""
        images = []
        for i, blk in enumerate(self.blocks):
            targets = {self._block_of.get(p[x]) for x in blk}
            if len(targets) != 1 or None in targets:
                raise ValueError("permutation does not permute the block family")
            j = targets.pop()
            if len(self.blocks[j]) != len(blk):
                raise ValueError("permutation does not permute the block family")
            images.append(j)
        return Perm(images)


def induced_action(group: PermGroup, blocks: Sequence[Sequence[int]]) -> BlockAction:
    return BlockAction(group, blocks)


class Coset:
    """Right coset ``G * rep`` of a permutation group, or the empty set."""

    def __init__(self, rep: Perm | None = None, group: PermGroup | None = None):
        if (rep is None) != (group is None):
            raise ValueError("rep and group must be given together")
        if rep is not None and rep.degree != group.degree:
            raise ValueError("representative degree differs from group degree")
        self.rep = rep
        self.group = group

    @classmethod
    def empty(cls) -> "Coset":
        return cls()

    @property
    def is_empty(self) -> bool:
        return self.rep is None

    def __contains__(self, p: Perm) -> bool:
        if self.is_empty:
            return False
        return (p * ~self.rep) in self.group

    def size(self) -> int:
        return 0 if self.is_empty else self.group.order()

    def elements(self) -> Iterator[Perm]:
        if self.is_empty:
            return
        for g in self.group.elements():
            yield g * self.rep

    def __repr__(self) -> str:
        if self.is_empty:
            return "Coset(empty)"
        return "Coset(size=%d, rep=%s)" % (self.size(), self.rep.cycle_str())
