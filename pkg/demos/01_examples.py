"""Walk through the three worked covers and print their invariants.

Run:  python3 demos/01_examples.py
"""
from monofib import MonodromyPair, analyze
from monofib.corpus import example_2_as_printed, example_3, run_example
from monofib.perm import CycleSyntaxError, commutator


def show(title, pair):
    inv = analyze(pair)
    print(f"{title}: degree {pair.degree}")
    print(f"  alpha = {pair.alpha}   beta = {pair.beta}")
    print(f"  [alpha, beta] = {inv.commutator}")
    print(f"  |G| = {inv.group_order}, primitive = {inv.primitive}")
    print(f"  g_C = {inv.curve_genus}, g = {inv.fibre_genus}, "
          f"chi = {inv.chi}, K^2 = {inv.k_squared}, c2 = {inv.c2}")
    print()


# The smallest case: two 3-cycles in S_4 whose commutator is a double transposition.
ex1 = MonodromyPair.parse("(1 2 3)", "(2 3 4)", 4)
show("First example", ex1)

# Degree 8 with a 7-cycle.  The transcription repeats the point 3, which is not a
# permutation at all; the library refuses it rather than guessing.
try:
    example_2_as_printed().pair
except CycleSyntaxError as exc:
    print(f"As transcribed, the second example is rejected: {exc}\n")
show("Second example (corrected alpha)", MonodromyPair.parse("(1 2 3 4 5 6 7)", "(8 3 4 1 5 6)", 8))

# The infinite family: beta = gamma * delta with commuting factors.
for n in (2, 3):
    rec = example_3(n)
    outcome = run_example(rec)
    show(f"Family member n={n}", rec.pair)
    for check, ok in outcome.checks.items():
        print(f"  {check}: {'ok' if ok else 'FAILED'}")
    print()

# Right-to-left composition means [a, b] = a b a^-1 b^-1 applies b^-1 first.
print("commutator check:", commutator(ex1.alpha, ex1.beta) == ex1.commutator())
