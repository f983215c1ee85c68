"""Group-theoretic helpers: orbits, blocks, stabilizer chains.

Run:  python3 demos/04_groups.py
"""
from monofib.groups import (
    GeneratedGroup,
    block_system,
    enumerate_elements,
    group_order,
    is_primitive,
    stabilizer_chain,
)
from monofib.perm import parse_cycles


def group(d, *texts):
    return GeneratedGroup([parse_cycles(t, d) for t in texts])


# The dihedral group of the square preserves the diagonals {1,3}, {2,4}.
d4 = group(4, "(1 2 3 4)", "(1 3)")
print("D4 primitive?", is_primitive(d4), " blocks:", block_system(d4, (1, 3)).blocks)

# A_4 has no blocks at all.
a4 = group(4, "(1 2 3)", "(2 3 4)")
print("A4 primitive?", is_primitive(a4), " order:", group_order(a4), "=", len(enumerate_elements(a4)))

# The degree-8 example group: order 336 from a Schreier-Sims chain.
g = group(8, "(1 2 3 4 5 6 7)", "(8 3 4 1 5 6)")
chain = stabilizer_chain(g)
print("degree-8 group: base", chain.base, "orbit sizes", chain.orbit_sizes, "order", chain.order())

# Chains scale well past brute force: S_21 from the n=5 family member.
from monofib.corpus import example_3

big = example_3(5).pair.group()
print("n=5 family group order:", group_order(big))
