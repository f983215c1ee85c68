"""From monodromy data to the invariants of the difference fibration.

A pair (alpha, beta) in S_d describes a degree-d cover f: C -> E of an
elliptic curve branched over one point; the commutator [alpha, beta] is the
local monodromy there. For such a cover the map C x C -> E, (a, b) -> f(a) - f(b)
is a fibration whose only singular fibre lies over the branch point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .groups import GeneratedGroup, group_order, is_primitive, is_transitive
from .perm import Permutation, commutator, cycle_decomposition


class ConstructionError(ValueError):
    """Inputs violate the hypotheses of the construction (e.g. g_C < 2)."""


@dataclass(frozen=True)
class MonodromyPair:
    alpha: Permutation
    beta: Permutation

    def __post_init__(self):
        if self.alpha.degree != self.beta.degree:
            raise ValueError("alpha and beta must have the same degree")

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @classmethod
    def parse(cls, alpha: str, beta: str, degree: int) -> "MonodromyPair":
        return cls(Permutation.parse(alpha, degree), Permutation.parse(beta, degree))

    def commutator(self) -> Permutation:
        return commutator(self.alpha, self.beta)

    def group(self) -> GeneratedGroup:
        return GeneratedGroup([self.alpha, self.beta])


@dataclass(frozen=True)
class RamificationProfile:
    """Nontrivial cycle lengths of the commutator, largest first."""

    degree: int
    nontrivial_cycle_lengths: tuple[int, ...]

    def __post_init__(self):
        if any(n < 2 for n in self.nontrivial_cycle_lengths):
            raise ValueError("ramification indices must be at least 2")
        if sum(self.nontrivial_cycle_lengths) > self.degree:
            raise ValueError("cycle lengths exceed the degree")

    @property
    def ramification_sum(self) -> int:
        return sum(n - 1 for n in self.nontrivial_cycle_lengths)


@dataclass(frozen=True)
class BeauvilleInput:
    fibre_genus: int
    normalization_genus: int
    component_count: int

    def __post_init__(self):
        if min(self.fibre_genus, self.normalization_genus) < 0 or self.component_count < 1:
            raise ValueError("genera must be >= 0 and component count >= 1")


@dataclass(frozen=True)
class CoverInvariants:
    """Everything ``analyze`` derives from a pair.

    Fields that make no sense for the pair (for example the fibre genus when
    g_C < 2) are None. ``valid`` is the conjunction of the four hypotheses
    the construction needs.
    """

    degree: int
    commutator: str
    ramification: tuple[int, ...]
    curve_genus: int
    fibre_genus: Optional[int]
    chi: Optional[int]
    k_squared: Optional[int]
    c2: Optional[int]
    node_count: Optional[int]
    delta_gamma: Optional[int]
    ramification_point_count: int
    group_order: int
    transitive: bool
    primitive: bool
    reduced_ramification: bool
    valid: bool


@dataclass(frozen=True)
class BoundEntry:
    label: str
    statement: str
    status: str  # "pass", "fail" or "n/a"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class BoundsReport:
    fibre_genus: int
    chi: int
    k_squared: int
    c2: int
    stable: bool
    entries: tuple[BoundEntry, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def all_passed(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def entry(self, label: str) -> BoundEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)


def ramification_profile(m: MonodromyPair) -> RamificationProfile:
    dec = cycle_decomposition(m.commutator())
    lengths = tuple(sorted((len(c) for c in dec.cycles), reverse=True))
    return RamificationProfile(m.degree, lengths)


def is_reduced_ramification(p: RamificationProfile) -> bool:
    """Simple ramification: nonempty and every cycle a transposition."""
    return bool(p.nontrivial_cycle_lengths) and all(n == 2 for n in p.nontrivial_cycle_lengths)


def curve_genus(p: RamificationProfile) -> int:
    """Riemann-Hurwitz over a genus-one base: 2 g_C - 2 = sum (e_i - 1)."""
    r = p.ramification_sum
    if r % 2:
        raise ValueError(f"odd ramification sum {r}; profile cannot come from a commutator")
    return 1 + r // 2


def fibre_genus(curve_genus: int, degree: int) -> int:
    if curve_genus < 2:
        raise ConstructionError("the construction needs g_C >= 2")
    if degree < 2:
        raise ConstructionError("the construction needs degree >= 2")
    return 2 * (curve_genus - 1) * degree + 1


def surface_invariants(curve_genus: int) -> tuple[int, int, int]:
    """(chi, K^2, c_2) of C x C."""
    if curve_genus < 2:
        raise ConstructionError("the construction needs g_C >= 2")
    m = (curve_genus - 1) ** 2
    return m, 8 * m, 4 * m


def singular_fibre_stats(curve_genus: int) -> tuple[int, int]:
    """(node count, Delta.Gamma) of the fibre over the branch point.

    With simple ramification there are r = 2 g_C - 2 ramification points and
    each of the r^2 points of R x R is a node.
    """
    if curve_genus < 2:
        raise ConstructionError("the construction needs g_C >= 2")
    r = 2 * curve_genus - 2
    return r * r, r


def beauville_node_count(b: BeauvilleInput) -> int:
    n = b.fibre_genus - b.normalization_genus + b.component_count - 1
    if n < 0:
        raise ValueError(f"inconsistent fibre data gives {n} double points")
    return n


def bounds_report(g: int, chi: int, k_squared: int, c2: int, stable: bool = True) -> BoundsReport:
    """Check the inequalities satisfied by a semistable fibration over an
    elliptic curve with a single singular fibre.

    Failures are entries in the report, never exceptions. All comparisons
    are done in exact integer arithmetic.
    """
    if g < 2:
        raise ValueError("fibre genus must be at least 2")

    def verdict(ok: bool) -> str:
        return "pass" if ok else "fail"

    twelve_chi_fifths = Fraction(12 * chi, 5)
    entries = [
        BoundEntry("i", "K^2 < 2g - 2", verdict(k_squared < 2 * g - 2), f"{k_squared} < {2 * g - 2}"),
        BoundEntry("ii", "chi < g/2", verdict(2 * chi < g), f"{chi} < {Fraction(g, 2)}"),
        BoundEntry("iii", "c2 < 4g + 2", verdict(c2 < 4 * g + 2), f"{c2} < {4 * g + 2}"),
    ]
    notes = []
    if stable:
        entries.append(BoundEntry("iv", "c2 <= 3g - 3", verdict(c2 <= 3 * g - 3), f"{c2} <= {3 * g - 3}"))
        if c2 == 3 * g - 3:
            entries.append(BoundEntry("v", "c2 = 3g - 3 => q = 1, Albanese fibration", "n/a",
                                      "equality holds; conclusion is geometric and not checked"))
            notes.append("c2 = 3g - 3: then q = 1 and the fibration is the Albanese map (not verified here)")
        else:
            entries.append(BoundEntry("v", "c2 = 3g - 3 => q = 1, Albanese fibration", "n/a",
                                      "equality does not hold"))
        entries.append(BoundEntry("vi", "2 < 12 chi / 5 < g - 1",
                                  verdict(2 < twelve_chi_fifths < g - 1),
                                  f"2 < {_fmt_fraction(twelve_chi_fifths)} < {g - 1}"))
        entries.append(BoundEntry("g>=4", "g >= 4", verdict(g >= 4), f"{g} >= 4"))
        if g == 4:
            notes.append("g = 4 and stable: chi = 1, c2 <= 9, and 4 <= K^2 <= 5")
            if not 4 <= k_squared <= 5:
                notes.append(f"K^2 = {k_squared} is outside 4..5, so these values are not realized")
        if chi >= 2:
            notes.append("chi >= 2 forces g >= 6")
    else:
        for label, text in (("iv", "c2 <= 3g - 3"), ("v", "c2 = 3g - 3 => q = 1, Albanese fibration"),
                            ("vi", "2 < 12 chi / 5 < g - 1"), ("g>=4", "g >= 4")):
            entries.append(BoundEntry(label, text, "n/a", "only for stable fibrations"))
    return BoundsReport(g, chi, k_squared, c2, stable, tuple(entries), tuple(notes))


def _fmt_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    # 12 chi / 5 always has a terminating decimal expansion
    return f"{x.numerator / x.denominator:g}"


def analyze(m: MonodromyPair) -> CoverInvariants:
    g = m.group()
    comm = m.commutator()
    profile = ramification_profile(m)
    transitive = is_transitive(g)
    primitive = is_primitive(g)
    reduced = is_reduced_ramification(profile)
    gc = curve_genus(profile)
    if gc >= 2 and m.degree >= 2:
        fg = fibre_genus(gc, m.degree)
        chi, k2, c2 = surface_invariants(gc)
    else:
        fg = chi = k2 = c2 = None
    if gc >= 2 and reduced:
        nodes, dg = singular_fibre_stats(gc)
    else:
        nodes = dg = None
    return CoverInvariants(
        degree=m.degree,
        commutator=str(comm),
        ramification=profile.nontrivial_cycle_lengths,
        curve_genus=gc,
        fibre_genus=fg,
        chi=chi,
        k_squared=k2,
        c2=c2,
        node_count=nodes,
        delta_gamma=dg,
        ramification_point_count=len(profile.nontrivial_cycle_lengths),
        group_order=group_order(g),
        transitive=transitive,
        primitive=primitive,
        reduced_ramification=reduced,
        valid=transitive and primitive and reduced and gc >= 2,
    )

