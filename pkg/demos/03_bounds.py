"""Check the inequalities a fibration with one singular fibre must satisfy.

Run:  python3 demos/03_bounds.py
"""
from monofib import bounds_report
from monofib.cover import surface_invariants
from monofib.report import render_bounds

# Products C x C from the examples: (g, g_C)
for g, gc in ((9, 2), (33, 3), (37, 3)):
    chi, k2, c2 = surface_invariants(gc)
    rep = bounds_report(g, chi, k2, c2, stable=True)
    print(f"g={g}, chi={chi}, K^2={k2}, c2={c2}: {'all pass' if rep.all_passed else 'FAIL'}")
print()

# A hypothetical triple sitting on the c2 = 3g - 3 boundary triggers the extra notes.
print(render_bounds(bounds_report(4, 1, 3, 9, stable=True)))
print()

# Genus 3 with a single singular fibre is impossible for a stable family.
print(render_bounds(bounds_report(3, 1, 1, 1, stable=True)))
