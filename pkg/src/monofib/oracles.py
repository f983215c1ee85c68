"""Brute-force reference implementations for small degrees.

These share no code with the optimized paths on purpose: permutations are
plain 0-based tuples, primitivity enumerates every set partition, and
simultaneous conjugacy tries every relabeling. Use them for d <= 8.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def mul(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[q[x]] for x in range(len(q)))


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def commutator(a: Perm, b: Perm) -> Perm:
    return mul(mul(a, b), mul(inv(a), inv(b)))


def cycle_text(p: Perm) -> str:
    seen = set()
    parts = []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc = [s]
        seen.add(s)
        x = p[s]
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + " ".join(str(v + 1) for v in cyc) + ")")
    return "".join(parts) or "()"


def closure(gens: Sequence[Perm]) -> set[Perm]:
    n = len(gens[0])
    elems = {tuple(range(n))}
    frontier = list(elems)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(g, x)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


def set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[head]] + part
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]


def transitive(gens: Sequence[Perm]) -> bool:
    n = len(gens[0])
    reached = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            if g[x] not in reached:
                reached.add(g[x])
                stack.append(g[x])
    return len(reached) == n


def invariant_partitions(gens: Sequence[Perm]) -> list[list[list[int]]]:
    """Every nontrivial equal-size partition mapped to itself by all gens."""
    n = len(gens[0])
    found = []
    for part in set_partitions(list(range(n))):
        if len(part) in (1, n) or len({len(b) for b in part}) != 1:
            continue
        blocks = {frozenset(b) for b in part}
        if all(frozenset(g[x] for x in b) in blocks for g in gens for b in part):
            found.append(part)
    return found


def primitive(gens: Sequence[Perm]) -> bool:
    if len(gens[0]) == 1:
        return True
    return transitive(gens) and not invariant_partitions(gens)


def is_product_of_disjoint_transpositions(p: Perm) -> int:
    """Number k of transpositions if p is such a product with k >= 1, else 0."""
    moved = [x for x in range(len(p)) if p[x] != x]
    if not moved or any(p[p[x]] != x for x in moved):
        return 0
    return len(moved) // 2


def full_class_key(a: Perm, b: Perm, relabelings: Sequence[Perm] | None = None) -> tuple[str, str]:
    """Smallest (alpha text, beta text) over simultaneous conjugation."""
    if relabelings is None:
        relabelings = list(permutations(range(len(a))))
    best = None
    for s in relabelings:
        si = inv(s)
        key = (cycle_text(mul(mul(s, a), si)), cycle_text(mul(mul(s, b), si)))
        if best is None or key < best:
            best = key
    return best


def exhaustive_classes(d: int, ks: Sequence[int]) -> dict[int, set[tuple[str, str]]]:
    """Scan every ordered pair of S_d; group valid pairs by full conjugacy.

    Valid means: commutator is k disjoint transpositions with k in ks,
    <a, b> is transitive and primitive.
    """
    group = list(permutations(range(d)))
    out: dict[int, set[tuple[str, str]]] = {k: set() for k in ks}
    classified: set[tuple[Perm, Perm]] = set()
    for a in group:
        for b in group:
            if (a, b) in classified:
                continue
            k = is_product_of_disjoint_transpositions(commutator(a, b))
            if k not in out or not primitive([a, b]):
                continue
            orbit = set()
            for s in group:
                si = inv(s)
                orbit.add((mul(mul(s, a), si), mul(mul(s, b), si)))
            classified |= orbit
            out[k].add(min((cycle_text(x), cycle_text(y)) for x, y in orbit))
    return out
