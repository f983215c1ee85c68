"""Permutations of {1, ..., d} stored as image tables.

Points are 1-based everywhere a caller can see them. Composition is
right-to-left: ``p * q`` is the map ``x -> p(q(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class CycleSyntaxError(ValueError):
    """Raised when cycle notation cannot be parsed into a permutation."""


class Permutation:
    """An immutable bijection of {1, ..., degree}.

    Internally the image table is a 0-based tuple; ``images`` exposes the
    1-based view.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        img = tuple(int(v) - 1 for v in images)
        if not img:
            raise ValueError("degree must be at least 1")
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {[v + 1 for v in img]}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _from_table(cls, table: Sequence[int]) -> "Permutation":
        # trusted 0-based constructor, skips validation
        p = cls.__new__(cls)
        p._img = tuple(table)
        p._hash = hash(p._img)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls._from_table(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Right-to-left product of the given cycles (1-based points)."""
        result = list(range(degree))
        for cycle in reversed(list(cycles)):
            if len(set(cycle)) != len(cycle):
                raise CycleSyntaxError(f"repeated point in cycle {tuple(cycle)}")
            for x in cycle:
                if not 1 <= x <= degree:
                    raise CycleSyntaxError(f"point {x} outside 1..{degree}")
            step = list(range(degree))
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                step[a - 1] = b - 1
            result = [step[v] for v in result]
        return cls._from_table(result)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self._img)

    @property
    def table(self) -> tuple[int, ...]:
        """0-based image table, for hot loops that index directly."""
        return self._img

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self._img):
            raise ValueError(f"point {point} outside 1..{len(self._img)}")
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else inverse(self)
        n = abs(n)
        result = Permutation.identity(self.degree)
        while n:
            if n & 1:
                result = compose(result, base)
            base = compose(base, base)
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return (len(self._img), self._img) < (len(other._img), other._img)

    def __repr__(self) -> str:
        return f"Permutation.parse({format_cycles(self)!r}, {self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._img))

    def order(self) -> int:
        from math import lcm

        return lcm(*cycle_type(self))

    def sign(self) -> int:
        return -1 if sum(n - 1 for n in cycle_type(self)) % 2 else 1

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint-cycle form: each cycle starts at its smallest
    point and cycles are ordered by that point."""

    degree: int
    cycles: tuple[tuple[int, ...], ...]
    fixed_points: frozenset[int]

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


_CYCLE = r"\(\s*(?:\d+(?:(?:\s*,\s*|\s+)\d+)*)?\s*\)"
_NOTATION = re.compile(rf"\s*(?:{_CYCLE}\s*)+")
_BODY = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1 2 3)(4, 5)"``.

    ``"()"`` and ``"id"`` give the identity; points not listed are fixed.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if text.strip() == "id":
        return Permutation.identity(degree)
    if not _NOTATION.fullmatch(text):
        raise CycleSyntaxError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _BODY.findall(text):
        points = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if points:
            cycles.append(points)
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    return str(cycle_decomposition(p))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, i.e. apply q first."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    pt = p.table
    return Permutation._from_table([pt[v] for v in q.table])


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, v in enumerate(p.table):
        inv[v] = i
    return Permutation._from_table(inv)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """a b a^-1 b^-1 under right-to-left composition."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    at, bt = a.table, b.table
    ai, bi = inverse(a).table, inverse(b).table
    return Permutation._from_table([at[bt[ai[bi[x]]]] for x in range(a.degree)])


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    """by ∘ p ∘ by^-1 (relabels points of p through ``by``)."""
    return compose(compose(by, p), inverse(by))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    img = p.table
    seen = [False] * len(img)
    cycles = []
    fixed = []
    for start in range(len(img)):
        if seen[start]:
            continue
        if img[start] == start:
            seen[start] = True
            fixed.append(start + 1)
            continue
        cycle = [start + 1]
        seen[start] = True
        x = img[start]
        while x != start:
            seen[x] = True
            cycle.append(x + 1)
            x = img[x]
        cycles.append(tuple(cycle))
    return CycleDecomposition(p.degree, tuple(cycles), frozenset(fixed))


def cycle_type(p: Permutation) -> list[int]:
    """All cycle lengths, fixed points counted as 1, largest first."""
    dec = cycle_decomposition(p)
    return sorted([len(c) for c in dec.cycles] + [1] * len(dec.fixed_points), reverse=True)
