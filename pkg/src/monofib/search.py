"""Exhaustive search for one-branch-point primitive monodromy pairs.

Any solution (alpha, beta) can be conjugated so that alpha is the fixed
representative of its cycle type, so alpha runs over one permutation per
partition of d while beta runs over all of S_d. Beta is screened in bulk by
a vectorized commutator check before any group analysis.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .cover import CoverInvariants, MonodromyPair, analyze
from .groups import primitivity_flags
from .perm import Permutation, format_cycles, inverse

log = logging.getLogger(__name__)

DEDUP_MODES = ("off", "centralizer", "full")
MAX_EXHAUSTIVE_DEGREE = 9
MAX_FULL_DEDUP_DEGREE = 8
WORKERS_ENV = "MONOFIB_WORKERS"
# beta chunks hold at most 8! permutations
_CHUNK_FREE_POINTS = 8


class InfeasibleConfigError(ValueError):
    pass


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "").strip()
    if not raw:
        return 1
    n = int(raw)
    if n < 1:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer")
    return n


def feasible_transpositions(degree: int) -> tuple[int, ...]:
    """Even k >= 2 with 2k <= degree."""
    return tuple(k for k in range(2, degree // 2 + 1, 2))


@dataclass(frozen=True)
class SearchConfig:
    degree: int
    transpositions: tuple[int, ...]
    alpha_cycle_type: Optional[tuple[int, ...]] = None
    max_results: Optional[int] = None
    dedup: str = "centralizer"
    workers: int = field(default_factory=default_workers)
    deterministic_order: bool = True
    log_near_misses: bool = False

    def __post_init__(self):
        ks = self.transpositions
        if isinstance(ks, int):
            ks = (ks,)
        object.__setattr__(self, "transpositions", tuple(sorted(set(int(k) for k in ks))))
        if self.alpha_cycle_type is not None:
            object.__setattr__(self, "alpha_cycle_type", _normalize_partition(self.alpha_cycle_type, self.degree))
        self.validate()

    def validate(self) -> None:
        d = self.degree
        if d < 1:
            raise InfeasibleConfigError("degree must be positive")
        if not self.transpositions:
            raise InfeasibleConfigError("no target transposition count given")
        for k in self.transpositions:
            if k < 2 or k % 2:
                raise InfeasibleConfigError(f"k = {k}: a commutator is even, so k must be even and >= 2")
            if 2 * k > d:
                raise InfeasibleConfigError(f"k = {k}: {k} disjoint transpositions need {2 * k} > {d} points")
        if self.dedup not in DEDUP_MODES:
            raise InfeasibleConfigError(f"dedup must be one of {DEDUP_MODES}")
        if self.dedup == "full" and d > MAX_FULL_DEDUP_DEGREE:
            raise InfeasibleConfigError(f"full dedup is limited to degree <= {MAX_FULL_DEDUP_DEGREE}")
        if d > MAX_EXHAUSTIVE_DEGREE and self.alpha_cycle_type is None:
            raise InfeasibleConfigError(
                f"degree {d} > {MAX_EXHAUSTIVE_DEGREE} requires an alpha cycle-type filter")
        if self.workers < 1:
            raise InfeasibleConfigError("workers must be >= 1")
        if self.max_results is not None and self.max_results < 0:
            raise InfeasibleConfigError("max_results must be >= 0")


def _normalize_partition(parts: Iterable[int], degree: int) -> tuple[int, ...]:
    parts = sorted((int(p) for p in parts if int(p) > 1), reverse=True)
    if sum(parts) > degree:
        raise InfeasibleConfigError(f"cycle type {parts} does not fit in degree {degree}")
    return tuple(parts) + (1,) * (degree - sum(parts))


@dataclass(frozen=True)
class Certificate:
    pair: MonodromyPair
    invariants: CoverInvariants
    canonical_form: str


@dataclass
class SearchStats:
    pairs_scanned: int = 0
    pruned: int = 0
    rejected_by_group: int = 0
    near_misses: int = 0
    survivors: int = 0
    classes: int = 0
    wall_time: float = 0.0


@dataclass
class SearchResult:
    certificates: list[Certificate]
    stats: SearchStats


# -- partitions and class representatives -----------------------------------

def integer_partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n, parts descending, in reverse lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def class_representative(partition: Sequence[int]) -> Permutation:
    """Cycles of the given lengths laid out on consecutive points, longest first."""
    parts = sorted(partition, reverse=True)
    cycles = []
    start = 1
    for n in parts:
        if n > 1:
            cycles.append(list(range(start, start + n)))
        start += n
    return Permutation.from_cycles(cycles, sum(parts))


def cycle_types_of_degree(d: int) -> list[tuple[int, ...]]:
    if d < 1:
        raise ValueError("degree must be positive")
    return integer_partitions(d)


def centralizer_elements(alpha: Permutation) -> np.ndarray:
    """Every permutation commuting with alpha, as 0-based rows."""
    d = alpha.degree
    by_len: dict[int, list[list[int]]] = {}
    seen = [False] * d
    t = alpha.table
    for s in range(d):
        if seen[s]:
            continue
        c = [s]
        seen[s] = True
        x = t[s]
        while x != s:
            seen[x] = True
            c.append(x)
            x = t[x]
        by_len.setdefault(len(c), []).append(c)

    # centralizer is a product over cycle lengths of C_len wr S_count
    factors = []
    for n, cycles in sorted(by_len.items()):
        options = []
        for perm in permutations(range(len(cycles))):
            for shifts in product(range(n), repeat=len(cycles)):
                mapping = []
                for j, c in enumerate(cycles):
                    target = cycles[perm[j]]
                    mapping.extend((c[i], target[(i + shifts[j]) % n]) for i in range(n))
                options.append(mapping)
        factors.append(options)
    rows = []
    for combo in product(*factors):
        row = [0] * d
        for mapping in combo:
            for src, dst in mapping:
                row[src] = dst
        rows.append(row)
    return np.array(rows, dtype=np.int16)


# -- scanning ---------------------------------------------------------------

@lru_cache(maxsize=4)
def _perm_table(m: int) -> np.ndarray:
    return np.array(list(permutations(range(m))), dtype=np.int16).reshape(-1, m)


def _beta_block(d: int, prefix: tuple[int, ...]) -> np.ndarray:
    rest = np.array([x for x in range(d) if x not in prefix], dtype=np.int16)
    tail = rest[_perm_table(len(rest))]
    if not prefix:
        return tail
    head = np.broadcast_to(np.array(prefix, dtype=np.int16), (len(tail), len(prefix)))
    return np.concatenate([head, tail], axis=1)


def commutator_filter(alpha: Sequence[int], betas: np.ndarray, ks: Sequence[int]) -> np.ndarray:
    """Boolean mask of rows beta with [alpha, beta] a product of exactly k
    disjoint transpositions for some k in ``ks``."""
    m, d = betas.shape
    a = np.asarray(alpha, dtype=np.int16)
    a_inv = np.argsort(a).astype(np.int16)
    b_inv = np.empty_like(betas)
    np.put_along_axis(b_inv, betas, np.broadcast_to(np.arange(d, dtype=np.int16), (m, d)), axis=1)
    # [a, b](x) = a(b(a^-1(b^-1(x))))
    comm = a[np.take_along_axis(betas, a_inv[b_inv], axis=1)]
    ident = np.arange(d, dtype=np.int16)
    involution = (np.take_along_axis(comm, comm, axis=1) == ident).all(axis=1)
    moved = (comm != ident).sum(axis=1)
    return involution & np.isin(moved, 2 * np.asarray(ks))


@dataclass
class _ChunkResult:
    alpha_index: int
    survivors: list[tuple[int, ...]]
    scanned: int
    pruned: int
    rejected: int
    near_misses: list[tuple[int, ...]]


def _scan_chunk(task: tuple[int, int, tuple[int, ...], tuple[int, ...], tuple[int, ...]]) -> _ChunkResult:
    alpha_index, d, alpha, prefix, ks = task
    betas = _beta_block(d, prefix)
    mask = commutator_filter(alpha, betas, ks)
    hits = betas[mask]
    survivors, near = [], []
    rejected = 0
    for row in hits.tolist():
        beta = tuple(row)
        transitive, primitive = primitivity_flags((alpha, beta), d)
        if primitive:
            survivors.append(beta)
        else:
            rejected += 1
            if transitive:
                near.append(beta)
    return _ChunkResult(alpha_index, survivors, len(betas), len(betas) - len(hits), rejected, near)


def _tasks(cfg: SearchConfig, alphas: list[Permutation]) -> list[tuple]:
    d = cfg.degree
    depth = max(0, d - _CHUNK_FREE_POINTS)
    tasks = []
    for idx, alpha in enumerate(alphas):
        for prefix in permutations(range(d), depth):
            tasks.append((idx, d, alpha.table, prefix, cfg.transpositions))
    return tasks


# -- canonical forms --------------------------------------------------------

def _fmt0(row: Sequence[int]) -> str:
    return format_cycles(Permutation._from_table(row))


def _conjugates(p: Sequence[int], by: np.ndarray) -> np.ndarray:
    """Rows by_i ∘ p ∘ by_i^-1 for every row of ``by``."""
    m, d = by.shape
    by_inv = np.empty_like(by)
    np.put_along_axis(by_inv, by, np.broadcast_to(np.arange(d, dtype=by.dtype), (m, d)), axis=1)
    return np.take_along_axis(by, np.asarray(p, dtype=by.dtype)[by_inv], axis=1)


@lru_cache(maxsize=64)
def _full_alpha_normalizer(alpha: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(alpha0, tau): alpha0 is the conjugate of alpha with the smallest text,
    tau any permutation with tau alpha tau^-1 = alpha0."""
    d = len(alpha)
    sigma = _perm_table(d)
    conj = _conjugates(alpha, sigma)
    uniq, first = np.unique(conj, axis=0, return_index=True)
    texts = [_fmt0(r) for r in uniq.tolist()]
    best = min(range(len(texts)), key=texts.__getitem__)
    return tuple(uniq[best].tolist()), tuple(sigma[first[best]].tolist())


def _alpha_to_representative(alpha: Permutation) -> tuple[Permutation, Permutation]:
    """(rep, tau) with rep the class representative and tau alpha tau^-1 = rep."""
    from .perm import cycle_decomposition

    dec = cycle_decomposition(alpha)
    cycles = sorted(dec.cycles, key=len, reverse=True) + [(x,) for x in sorted(dec.fixed_points)]
    # stable sort keeps cycles of equal length ordered by smallest point
    tau = [0] * alpha.degree
    pos = 0
    for c in cycles:
        for x in c:
            tau[x - 1] = pos
            pos += 1
    rep = class_representative([len(c) for c in cycles])
    return rep, Permutation._from_table(tau)


def _orbit_classes(alpha: tuple[int, ...], betas: Iterable[tuple[int, ...]], cent: np.ndarray):
    """Split betas into orbits under conjugation by the centralizer rows."""
    pending = set(betas)
    for beta in sorted(pending):
        if beta not in pending:
            continue
        orbit = {tuple(r) for r in np.unique(_conjugates(beta, cent), axis=0).tolist()}
        pending -= orbit
        yield orbit


def _pair_text(alpha_text: str, beta_text: str) -> str:
    return f"{alpha_text};{beta_text}"


def canonical_form(pair: MonodromyPair, mode: str = "centralizer") -> str:
    """Text that is equal for two pairs iff they are equivalent under ``mode``.

    centralizer: alpha is moved to its class representative, then beta's text
    is minimized over the centralizer of that representative.
    full: the (alpha, beta) texts are minimized over simultaneous conjugation
    by all of S_d; degree <= 8 only.
    """
    if mode == "off":
        return _pair_text(str(pair.alpha), str(pair.beta))
    if mode == "centralizer":
        rep, tau = _alpha_to_representative(pair.alpha)
        beta = (tau * pair.beta * inverse(tau)).table
        orbit = np.unique(_conjugates(beta, centralizer_elements(rep)), axis=0)
        return _pair_text(str(rep), min(_fmt0(r) for r in orbit.tolist()))
    if mode == "full":
        if pair.degree > MAX_FULL_DEDUP_DEGREE:
            raise ValueError(f"full canonical form is limited to degree <= {MAX_FULL_DEDUP_DEGREE}")
        alpha0, tau = _full_alpha_normalizer(pair.alpha.table)
        t = Permutation._from_table(tau)
        beta = (t * pair.beta * inverse(t)).table
        cent = centralizer_elements(Permutation._from_table(alpha0))
        orbit = np.unique(_conjugates(beta, cent), axis=0)
        return _pair_text(_fmt0(alpha0), min(_fmt0(r) for r in orbit.tolist()))
    raise ValueError(f"unknown dedup mode {mode!r}")


def _dedup_task(task) -> list[tuple[tuple[int, ...], tuple[int, ...], str]]:
    """Canonical (alpha, beta, text) triples for one alpha class."""
    alpha, betas, mode = task
    if mode == "off":
        return [(alpha, b, _pair_text(_fmt0(alpha), _fmt0(b))) for b in sorted(betas)]
    cent = centralizer_elements(Permutation._from_table(alpha))
    out = []
    if mode == "full":
        alpha0, tau = _full_alpha_normalizer(alpha)
        t = np.array([tau], dtype=np.int16)
        a_text = _fmt0(alpha0)
    for orbit in _orbit_classes(alpha, betas, cent):
        if mode == "centralizer":
            texts = {_fmt0(b): b for b in orbit}
            best = min(texts)
            out.append((alpha, texts[best], _pair_text(_fmt0(alpha), best)))
        else:
            texts = {}
            for b in orbit:
                moved = tuple(_conjugates(b, t)[0].tolist())
                texts[_fmt0(moved)] = moved
            best = min(texts)
            out.append((alpha0, texts[best], _pair_text(a_text, best)))
    return out


# -- driver -----------------------------------------------------------------

def _alphas(cfg: SearchConfig) -> list[Permutation]:
    if cfg.alpha_cycle_type is not None:
        return [class_representative(cfg.alpha_cycle_type)]
    return [class_representative(p) for p in cycle_types_of_degree(cfg.degree)]


def run_search(cfg: SearchConfig) -> SearchResult:
    """Run the whole search and return certificates plus counters.

    With ``deterministic_order`` the certificates are sorted by canonical
    form, so the output does not depend on ``workers``.
    """
    start = time.perf_counter()
    stats = SearchStats()
    alphas = _alphas(cfg)
    tasks = _tasks(cfg, alphas)
    survivors: dict[int, list[tuple[int, ...]]] = {i: [] for i in range(len(alphas))}

    executor = ProcessPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    try:
        mapper = executor.map if executor else map
        for res in mapper(_scan_chunk, tasks):
            stats.pairs_scanned += res.scanned
            stats.pruned += res.pruned
            stats.rejected_by_group += res.rejected
            stats.near_misses += len(res.near_misses)
            survivors[res.alpha_index].extend(res.survivors)
            if cfg.log_near_misses:
                a = _fmt0(alphas[res.alpha_index].table)
                for b in res.near_misses:
                    log.info("near miss (imprimitive): alpha=%s beta=%s", a, _fmt0(b))
        stats.survivors = sum(len(v) for v in survivors.values())

        dedup_tasks = [(alphas[i].table, survivors[i], cfg.dedup) for i in survivors if survivors[i]]
        triples = [t for chunk in mapper(_dedup_task, dedup_tasks) for t in chunk]
    finally:
        if executor:
            executor.shutdown()

    certs = []
    for alpha, beta, text in triples:
        pair = MonodromyPair(Permutation._from_table(alpha), Permutation._from_table(beta))
        certs.append(Certificate(pair, analyze(pair), text))
    if cfg.deterministic_order:
        certs.sort(key=lambda c: c.canonical_form)
    stats.classes = len(certs)
    if cfg.max_results is not None:
        certs = certs[: cfg.max_results]
    stats.wall_time = time.perf_counter() - start
    return SearchResult(certs, stats)


def search(cfg: SearchConfig) -> Iterator[Certificate]:
    yield from run_search(cfg).certificates


def validate_certificate(c: Certificate) -> bool:
    inv = analyze(c.pair)
    return (inv == c.invariants and inv.transitive and inv.primitive
            and inv.reduced_ramification and inv.curve_genus >= 2 and inv.valid)
