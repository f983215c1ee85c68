import pytest
from hypothesis import given, strategies as st

from monofib.corpus import example_3
from monofib.cover import (
    BeauvilleInput,
    ConstructionError,
    MonodromyPair,
    RamificationProfile,
    analyze,
    beauville_node_count,
    bounds_report,
    curve_genus,
    fibre_genus,
    is_reduced_ramification,
    ramification_profile,
    singular_fibre_stats,
    surface_invariants,
)
from monofib.perm import Permutation

EX1 = MonodromyPair.parse("(1 2 3)", "(2 3 4)", 4)
EX2 = MonodromyPair.parse("(1 2 3 4 5 6 7)", "(8 3 4 1 5 6)", 8)


def profile(*lengths, degree=20):
    return RamificationProfile(degree, tuple(lengths))


class TestRamification:
    def test_example_one(self):
        assert ramification_profile(EX1).nontrivial_cycle_lengths == (2, 2)

    def test_commuting_pair(self):
        a = Permutation.parse("(1 2 3)", 4)
        assert ramification_profile(MonodromyPair(a, a)).nontrivial_cycle_lengths == ()

    def test_example_two(self):
        assert ramification_profile(EX2).nontrivial_cycle_lengths == (2, 2, 2, 2)

    @pytest.mark.parametrize("lengths, expected", [((2, 2), True), ((3,), False), ((), False), ((2, 3), False)])
    def test_reduced(self, lengths, expected):
        assert is_reduced_ramification(profile(*lengths)) is expected

    def test_profile_validation(self):
        with pytest.raises(ValueError):
            RamificationProfile(3, (2, 2))
        with pytest.raises(ValueError):
            RamificationProfile(5, (1,))


class TestGenera:
    @pytest.mark.parametrize("lengths, g", [((2, 2), 2), ((), 1), ((2, 2, 2, 2), 3), ((3,), 2)])
    def test_curve_genus(self, lengths, g):
        assert curve_genus(profile(*lengths)) == g

    def test_odd_sum_rejected(self):
        with pytest.raises(ValueError):
            curve_genus(profile(2))

    @pytest.mark.parametrize("gc, d, g", [(2, 4, 9), (3, 8, 33)])
    def test_fibre_genus(self, gc, d, g):
        assert fibre_genus(gc, d) == g

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 10])
    def test_fibre_genus_family(self, n):
        assert fibre_genus(n + 1, 4 * n + 1) == 2 * n * (4 * n + 1) + 1

    def test_fibre_genus_needs_ramification(self):
        with pytest.raises(ConstructionError):
            fibre_genus(1, 4)

    @given(st.integers(2, 60), st.integers(2, 60))
    def test_fibre_genus_increasing(self, gc, d):
        assert fibre_genus(gc + 1, d) > fibre_genus(gc, d)
        assert fibre_genus(gc, d + 1) > fibre_genus(gc, d)


class TestSurface:
    @pytest.mark.parametrize("gc", range(2, 12))
    def test_against_product_formulas(self, gc):
        # chi(O) and c2 are multiplicative on products; K = pr1*K_C + pr2*K_C
        chi_curve = 1 - gc
        euler_curve = 2 - 2 * gc
        chi, k2, c2 = surface_invariants(gc)
        assert chi == chi_curve * chi_curve
        assert c2 == euler_curve * euler_curve
        assert k2 == 2 * (2 * gc - 2) * (2 * gc - 2)
        assert 12 * chi == k2 + c2

    def test_values(self):
        assert surface_invariants(2) == (1, 8, 4)
        assert surface_invariants(3) == (4, 32, 16)

    def test_rejects_low_genus(self):
        with pytest.raises(ConstructionError):
            surface_invariants(1)

    def test_singular_fibre(self):
        assert singular_fibre_stats(2) == (4, 2)
        assert singular_fibre_stats(3) == (16, 4)
        for gc in range(2, 30):
            assert singular_fibre_stats(gc)[0] == surface_invariants(gc)[2]
        with pytest.raises(ConstructionError):
            singular_fibre_stats(1)


class TestBeauville:
    def test_values(self):
        assert beauville_node_count(BeauvilleInput(3, 1, 3)) == 4
        assert beauville_node_count(BeauvilleInput(2, 2, 1)) == 0

    def test_rearrangement(self):
        # four nodes on a genus-9 fibre with c components needs g(N) = 4 + c
        for c in range(1, 6):
            assert beauville_node_count(BeauvilleInput(9, 4 + c, c)) == 4

    def test_inconsistent(self):
        with pytest.raises(ValueError):
            beauville_node_count(BeauvilleInput(2, 5, 1))
        with pytest.raises(ValueError):
            BeauvilleInput(2, 0, 0)


class TestBounds:
    def test_example_one_all_pass(self):
        rep = bounds_report(9, 1, 8, 4, stable=True)
        assert rep.all_passed
        assert [e.label for e in rep.entries if e.status == "pass"] == ["i", "ii", "iii", "iv", "vi", "g>=4"]
        assert rep.entry("vi").detail == "2 < 2.4 < 8"

    def test_low_genus_fails(self):
        rep = bounds_report(3, 1, 1, 1, stable=True)
        assert rep.entry("g>=4").status == "fail"
        assert not rep.all_passed

    def test_example_two_all_pass(self):
        assert bounds_report(33, 4, 32, 16, stable=True).all_passed

    def test_equality_case_notes(self):
        rep = bounds_report(4, 1, 3, 9, stable=True)
        assert rep.entry("iv").passed
        assert any("q = 1" in n for n in rep.notes)
        assert any("4 <= K^2 <= 5" in n for n in rep.notes)

    def test_semistable_skips_stable_entries(self):
        rep = bounds_report(3, 1, 1, 1, stable=False)
        assert {e.label: e.status for e in rep.entries if e.status == "n/a"} == {
            "iv": "n/a", "v": "n/a", "vi": "n/a", "g>=4": "n/a"}
        assert rep.all_passed

    def test_strictness(self):
        assert bounds_report(9, 1, 16, 4).entry("i").status == "fail"
        assert bounds_report(8, 4, 1, 1).entry("ii").status == "fail"
        assert bounds_report(9, 1, 1, 38).entry("iii").status == "fail"
        assert bounds_report(9, 1, 1, 25).entry("iv").status == "fail"
        # 12 chi / 5 must exceed 2 strictly and stay below g - 1
        assert bounds_report(20, 0, 1, 1).entry("vi").status == "fail"
        assert bounds_report(5, 2, 1, 1).entry("vi").status == "fail"


class TestAnalyze:
    def test_example_one(self):
        inv = analyze(EX1)
        assert inv.valid
        assert (inv.curve_genus, inv.fibre_genus, inv.chi, inv.k_squared, inv.c2) == (2, 9, 1, 8, 4)
        assert (inv.node_count, inv.delta_gamma, inv.group_order) == (4, 2, 12)
        assert inv.ramification_point_count == 2

    def test_trivial_commutator(self):
        t = Permutation.parse("(1 2)", 2)
        inv = analyze(MonodromyPair(t, t))
        assert not inv.valid and not inv.reduced_ramification
        assert inv.curve_genus == 1 and inv.fibre_genus is None

    def test_family(self):
        inv = analyze(example_3(2).pair)
        assert inv.valid and inv.primitive
        assert (inv.curve_genus, inv.fibre_genus) == (3, 37)

    def test_non_simple_ramification_keeps_genus_data(self):
        # a 3-cycle commutator: g_C = 2 but the fibre is not nodal
        a = Permutation.parse("(1 2)", 3)
        b = Permutation.parse("(2 3)", 3)
        inv = analyze(MonodromyPair(a, b))
        # [a, b] = (ab)^2 and ab = (1 2 3)
        assert inv.commutator == "(1 3 2)"
        assert not inv.reduced_ramification and not inv.valid
        assert inv.curve_genus == 2 and inv.fibre_genus == 7
        assert inv.node_count is None

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            MonodromyPair(Permutation.identity(2), Permutation.identity(3))


@given(st.integers(2, 9).flatmap(lambda d: st.tuples(st.permutations(range(1, d + 1)),
                                                       st.permutations(range(1, d + 1)))))
def test_analyze_consistency(ab):
    pair = MonodromyPair(Permutation(ab[0]), Permutation(ab[1]))
    inv = analyze(pair)
    assert inv == analyze(pair)
    if inv.chi is not None:
        assert 12 * inv.chi == inv.k_squared + inv.c2
    if inv.reduced_ramification:
        r = 2 * inv.curve_genus - 2
        assert inv.ramification_point_count == r
        assert inv.node_count == r * r == inv.c2
        assert inv.delta_gamma == r
    if inv.valid:
        assert pair.degree >= 2 * (2 * inv.curve_genus - 2)
        assert bounds_report(inv.fibre_genus, inv.chi, inv.k_squared, inv.c2).entry("i").passed
