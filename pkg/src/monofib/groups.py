"""Structure of a permutation group given by generators.

Transitivity, minimal blocks (union-find refinement), primitivity, and
group order from a deterministic Schreier-Sims stabilizer chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation

DEFAULT_ENUMERATION_CAP = 10**6


class ClosureOverflowError(RuntimeError):
    """The group has more elements than the enumeration cap allows."""


class IntransitiveGroupError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratedGroup:
    degree: int
    generators: tuple[Permutation, ...]

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = tuple(generators)
        if not gens:
            raise ValueError("at least one generator is required")
        if degree is None:
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("all generators must share the group degree")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", gens)

    @property
    def tables(self) -> list[tuple[int, ...]]:
        return [g.table for g in self.generators]


@dataclass(frozen=True)
class BlockSystem:
    """A nontrivial system of imprimitivity, blocks given as sorted tuples."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])


def _check_point(g: GeneratedGroup, point: int) -> None:
    if not 1 <= point <= g.degree:
        raise ValueError(f"point {point} outside 1..{g.degree}")


def _orbit0(tables: Sequence[Sequence[int]], start: int) -> set[int]:
    # generators of a finite group: forward closure already covers inverses
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for t in tables:
            y = t[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def orbit(g: GeneratedGroup, point: int) -> set[int]:
    _check_point(g, point)
    return {x + 1 for x in _orbit0(g.tables, point - 1)}


def orbits(g: GeneratedGroup) -> list[set[int]]:
    """Orbits sorted by smallest point."""
    left = set(range(1, g.degree + 1))
    out = []
    while left:
        o = orbit(g, min(left))
        out.append(o)
        left -= o
    return out


def is_transitive(g: GeneratedGroup) -> bool:
    return len(_orbit0(g.tables, 0)) == g.degree


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _block_classes(tables: Sequence[Sequence[int]], n: int, a: int, b: int) -> list[int]:
    """Union-find parent array of the finest invariant partition joining a and b."""
    parent = list(range(n))
    parent[_find(parent, b)] = _find(parent, a)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for t in tables:
            rx, ry = _find(parent, t[x]), _find(parent, t[y])
            if rx != ry:
                parent[ry] = rx
                queue.append((rx, ry))
    return parent


def minimal_block_containing(g: GeneratedGroup, pair: tuple[int, int]) -> set[int]:
    """Smallest block of a G-invariant partition containing both points.

    Returns all of {1..d} when no proper block contains the pair.
    """
    x, y = pair
    _check_point(g, x)
    _check_point(g, y)
    if x == y:
        raise ValueError("the two points must be distinct")
    if not is_transitive(g):
        raise IntransitiveGroupError("block systems are only defined here for transitive groups")
    parent = _block_classes(g.tables, g.degree, x - 1, y - 1)
    root = _find(parent, x - 1)
    return {p + 1 for p in range(g.degree) if _find(parent, p) == root}


def block_system(g: GeneratedGroup, pair: tuple[int, int]) -> BlockSystem | None:
    """The block system generated by ``pair``, or None if it is trivial."""
    x, y = pair
    block = minimal_block_containing(g, pair)
    if len(block) == g.degree:
        return None
    parent = _block_classes(g.tables, g.degree, x - 1, y - 1)
    classes: dict[int, list[int]] = {}
    for p in range(g.degree):
        classes.setdefault(_find(parent, p), []).append(p + 1)
    return BlockSystem(tuple(sorted(tuple(c) for c in classes.values())))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


def primitivity_flags(tables: Sequence[Sequence[int]], degree: int) -> tuple[bool, bool]:
    """(transitive, primitive) for 0-based generator tables."""
    if degree == 1:
        return True, True
    if len(_orbit0(tables, 0)) != degree:
        return False, False
    if _is_prime(degree):
        return True, True
    for y in range(1, degree):
        parent = _block_classes(tables, degree, 0, y)
        root = _find(parent, 0)
        if any(_find(parent, p) != root for p in range(degree)):
            return True, False
    return True, True


def is_primitive(g: GeneratedGroup) -> bool:
    """True iff G is transitive and preserves no nontrivial block system.

    Intransitive groups give False; degree 1 counts as primitive.
    """
    return primitivity_flags(g.tables, g.degree)[1]


def imprimitivity_witness(g: GeneratedGroup) -> BlockSystem | None:
    """Some nontrivial block system of a transitive group, or None if primitive."""
    for y in range(2, g.degree + 1):
        bs = block_system(g, (1, y))
        if bs is not None:
            return bs
    return None


# -- stabilizer chain -------------------------------------------------------

def _mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple([p[x] for x in q])


def _inv(p: Sequence[int]) -> tuple[int, ...]:
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    Each new base point is the smallest point moved by the element that
    forces the new level, so the chain depends only on the generator order.
    """

    def __init__(self, generators: Iterable[Sequence[int]], degree: int):
        self.degree = degree
        self._id = tuple(range(degree))
        self._base: list[int] = []
        self._gens: list[list[tuple[int, ...]]] = []
        self._trans: list[dict[int, tuple[int, ...]]] = []
        self._orbit: list[list[int]] = []
        self._done: list[set[tuple[int, int]]] = []

        gens = [tuple(g) for g in generators if tuple(g) != self._id]
        if not gens:
            return
        self._new_level(min(p for p in range(degree) if gens[0][p] != p))
        for h in gens:
            self._add_generator(h, 0)
        self._complete()

    def _new_level(self, point: int) -> None:
        self._base.append(point)
        self._gens.append([])
        self._trans.append({point: self._id})
        self._orbit.append([point])
        self._done.append(set())

    def _add_generator(self, h: tuple[int, ...], level: int) -> None:
        gens, trans, orb = self._gens[level], self._trans[level], self._orbit[level]
        closed = len(orb)
        gens.append(h)
        # old orbit points are already closed under the old generators;
        # extending in place keeps existing transversal entries fixed
        i = 0
        while i < len(orb):
            p = orb[i]
            up = trans[p]
            for g in (h,) if i < closed else gens:
                q = g[p]
                if q not in trans:
                    trans[q] = _mul(g, up)
                    orb.append(q)
            i += 1

    def sift(self, h: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        for level in range(start, len(self._base)):
            x = h[self._base[level]]
            u = self._trans[level].get(x)
            if u is None:
                return h, level
            h = _mul(_inv(u), h)
        return h, len(self._base)

    def _complete(self) -> None:
        i = len(self._base) - 1
        while i >= 0:
            restarted = False
            gens, trans, orb, done = self._gens[i], self._trans[i], self._orbit[i], self._done[i]
            for p in orb:
                for s, g in enumerate(gens):
                    if (p, s) in done:
                        continue
                    done.add((p, s))
                    h = _mul(_inv(trans[g[p]]), _mul(g, trans[p]))
                    residue, j = self.sift(h, i + 1)
                    if residue == self._id:
                        continue
                    if j == len(self._base):
                        self._new_level(min(x for x in range(self.degree) if residue[x] != x))
                    for level in range(i + 1, j + 1):
                        self._add_generator(residue, level)
                    i = j
                    restarted = True
                    break
                if restarted:
                    break
            if not restarted:
                i -= 1

    @property
    def base(self) -> tuple[int, ...]:
        """Base points, 1-based."""
        return tuple(p + 1 for p in self._base)

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(o) for o in self._orbit]

    def order(self) -> int:
        n = 1
        for size in self.orbit_sizes:
            n *= size
        return n

    def contains(self, p: Permutation) -> bool:
        residue, _ = self.sift(p.table)
        return residue == self._id


def stabilizer_chain(g: GeneratedGroup) -> StabilizerChain:
    return StabilizerChain(g.tables, g.degree)


def group_order(g: GeneratedGroup) -> int:
    return stabilizer_chain(g).order()


def enumerate_elements(g: GeneratedGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> frozenset[Permutation]:
    """All elements of G by closure; raises ClosureOverflowError past ``cap``."""
    ident = tuple(range(g.degree))
    tables = g.tables
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for t in tables:
                y = _mul(t, x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise ClosureOverflowError(f"group has more than {cap} elements")
                    nxt.append(y)
        frontier = nxt
    return frozenset(Permutation._from_table(t) for t in seen)
