"""Built-in worked examples of one-branch-point primitive covers.

Example 2 as usually printed lists alpha as ``(1, 2, 3, 3, 5, 6, 7)``,
which repeats 3 and is not a permutation. Replacing the second 3 by 4 gives
the stated commutator (1 5)(2 6)(3 4)(7 8) exactly, so that is the default;
the printed text is kept as ``2-as-printed``.

In the Example 3 family the long factor of beta is read interleaved:
delta = (2, 2n+2, 3, 2n+3, ..., 2n, 4n, 4n+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .cover import BoundsReport, CoverInvariants, MonodromyPair
from .perm import CycleSyntaxError, Permutation


@dataclass(frozen=True)
class ExampleRecord:
    name: str
    degree: int
    alpha_text: str
    beta_text: str
    expected: dict[str, Any]
    notes: str = ""
    # extra named checks beyond the invariants, e.g. power identities
    checks: dict[str, Callable[[MonodromyPair], bool]] = field(default_factory=dict, compare=False)

    @property
    def pair(self) -> MonodromyPair:
        """Raises CycleSyntaxError when the stored text is not a permutation."""
        return MonodromyPair.parse(self.alpha_text, self.beta_text, self.degree)


def example_1() -> ExampleRecord:
    return ExampleRecord(
        name="1",
        degree=4,
        alpha_text="(1 2 3)",
        beta_text="(2 3 4)",
        expected=dict(commutator="(1 4)(2 3)", transitive=True, primitive=True, group_order=12,
                      curve_genus=2, fibre_genus=9, chi=1, k_squared=8, c2=4, nodes=4,
                      delta_gamma=2, valid=True),
        notes="A_4 acting on four points; C has genus 2.",
    )


def example_2() -> ExampleRecord:
    return ExampleRecord(
        name="2",
        degree=8,
        alpha_text="(1 2 3 4 5 6 7)",
        beta_text="(8 3 4 1 5 6)",
        expected=dict(commutator="(1 5)(2 6)(3 4)(7 8)", transitive=True, primitive=True,
                      group_order=336, curve_genus=3, fibre_genus=33, valid=True),
        notes=("alpha corrected from the printed (1, 2, 3, 3, 5, 6, 7). Order 336 together with "
               "primitivity is consistent with G = PGL_2(F_7); the isomorphism itself is not checked."),
    )


def example_2_as_printed() -> ExampleRecord:
    return ExampleRecord(
        name="2-as-printed",
        degree=8,
        alpha_text="(1, 2, 3, 3, 5, 6, 7)",
        beta_text="(8, 3, 4, 1, 5, 6)",
        expected=dict(valid=False),
        notes="The printed alpha repeats the point 3 and is not a permutation.",
    )


def example_3_cycles(n: int) -> tuple[list[tuple[int, ...]], tuple[int, ...], tuple[int, ...]]:
    """(alpha cycles, gamma, delta) for the degree 4n + 1 member."""
    if n < 2:
        raise ValueError("the family starts at n = 2")
    alpha = [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
    gamma = (1, 2 * n + 1)
    delta = []
    for i in range(2, 2 * n + 1):
        delta += [i, 2 * n + i]
    delta.append(4 * n + 1)
    return alpha, gamma, tuple(delta)


def _cycles_text(cycles) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def example_3(n: int) -> ExampleRecord:
    alpha, gamma, delta = example_3_cycles(n)
    d = 4 * n + 1
    gamma_perm = Permutation.from_cycles([gamma], d)
    delta_perm = Permutation.from_cycles([delta], d)
    commutator = _cycles_text((2 * i - 1, 2 * i) for i in range(1, 2 * n + 1))
    return ExampleRecord(
        name=f"3@{n}",
        degree=d,
        alpha_text=_cycles_text(alpha),
        beta_text=_cycles_text([gamma, delta]),
        expected=dict(commutator=commutator, transitive=True, primitive=True, curve_genus=n + 1,
                      fibre_genus=2 * n * d + 1, valid=True),
        notes="beta = gamma * delta with the long cycle read in interleaved order.",
        checks={
            "gamma and delta commute": lambda m: gamma_perm * delta_perm == delta_perm * gamma_perm,
            "beta = gamma * delta": lambda m: m.beta == gamma_perm * delta_perm,
            f"beta^{4 * n - 1} = gamma": lambda m: m.beta ** (4 * n - 1) == gamma_perm,
        },
    )


BUILTIN_NAMES = ("1", "2", "2-as-printed", "3@2")


def get_example(name: str) -> ExampleRecord:
    if name == "1":
        return example_1()
    if name == "2":
        return example_2()
    if name == "2-as-printed":
        return example_2_as_printed()
    if name.startswith("3@"):
        try:
            n = int(name[2:])
        except ValueError:
            raise ValueError(f"bad example name {name!r}") from None
        return example_3(n)
    if name == "3":
        return example_3(2)
    raise ValueError(f"unknown example {name!r}; expected one of 1, 2, 2-as-printed, 3@n")


@dataclass
class ExampleOutcome:
    record: ExampleRecord
    pair: Optional[MonodromyPair]
    invariants: Optional[CoverInvariants]
    bounds: Optional[BoundsReport]
    mismatches: list[tuple[str, Any, Any]]
    checks: dict[str, bool]
    error: Optional[str] = None

    @property
    def matches(self) -> bool:
        return not self.mismatches and all(self.checks.values())

    @property
    def valid(self) -> bool:
        return self.invariants is not None and self.invariants.valid


def run_example(rec: ExampleRecord, stable: bool = True) -> ExampleOutcome:
    """Analyze the example and compare with its expected invariants."""
    from .report import invariants_record, verify_pair

    try:
        pair = rec.pair
    except CycleSyntaxError as exc:
        actual = {"valid": False}
        mismatches = [(k, v, actual.get(k)) for k, v in rec.expected.items() if actual.get(k) != v]
        return ExampleOutcome(rec, None, None, None, mismatches, {}, error=str(exc))
    inv, rep = verify_pair(pair, stable)
    actual = invariants_record(pair, inv)
    mismatches = [(k, v, actual.get(k)) for k, v in rec.expected.items() if actual.get(k) != v]
    checks = {name: bool(fn(pair)) for name, fn in rec.checks.items()}
    return ExampleOutcome(rec, pair, inv, rep, mismatches, checks)
