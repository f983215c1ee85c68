"""Exhaustive search over small degrees, with the two deduplication modes.

Run:  python3 demos/02_search.py
"""
from collections import Counter

from monofib import SearchConfig, run_search
from monofib.config import parse_search_config
from monofib.report import certificate_json
from monofib.search import validate_certificate

# Classes up to conjugation by the centralizer of alpha versus all of S_d.
for d in (4, 5, 6):
    for mode in ("centralizer", "full"):
        res = run_search(SearchConfig(d, 2, dedup=mode))
        s = res.stats
        print(f"d={d} dedup={mode:<11} scanned {s.pairs_scanned:>6}  pruned {s.pruned:>6}  "
              f"classes {s.classes:>3}  ({s.wall_time:.2f}s)")
print()

# The genus of C is fixed by k: 2 g_C - 2 = 2k.
res = run_search(SearchConfig(8, 4, alpha_cycle_type=(7, 1)))
print("d=8, k=4, alpha a 7-cycle:", len(res.certificates), "classes")
print("curve genera:", Counter(c.invariants.curve_genus for c in res.certificates))
print("group orders:", Counter(c.invariants.group_order for c in res.certificates))
print()

# Config files use the same keys as SearchConfig.
cfg = parse_search_config("degree = 4\ntranspositions = 2\ndedup = full\n")
for cert in run_search(cfg).certificates:
    assert validate_certificate(cert)
    print(certificate_json(cert))
