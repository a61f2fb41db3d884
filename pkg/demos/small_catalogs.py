"""Exhaustive minimisers for a handful of small phase counts.

Run: python3 demos/small_catalogs.py
"""

from bubblegrid import classify, enumerate_minimisers, is_admissible
from bubblegrid.render import render_ascii

CASES = [(2, 1), (3, 3), (4, 4), (3, 4), (5, 5)]

for na, nb in CASES:
    rep = enumerate_minimisers(na, nb, "1/2")
    print(f"N_A={na} N_B={nb}  E_min={rep.min_energy}  "
          f"minimisers: {rep.count_no_swap} (labelled), {rep.count_swap} (phase swap identified)")
    for c in rep.minimisers_with_swap:
        label = classify(c).label.value if is_admissible(c) else "-"
        print(f"  class {label}")
        print("    " + render_ascii(c).replace("\n", "\n    "))
    print()
print("(o = phase A, # = phase B)")
