"""Closed-form minimal perimeter, the straight-interface builder and the continuum limit.

Run: python3 demos/minimal_perimeter.py
"""

import math

from bubblegrid import perimeter
from bubblegrid.oracle import verify_formula
from bubblegrid.render import render_ascii
from bubblegrid.solver import build_explicit, continuum_energy, min_perimeter, wulff_discrepancy

beta = "1/2"

print("Brute force against the formula:")
for chk in verify_formula(5, beta):
    print(f"  N={chk.n}: oracle {chk.oracle_perimeter}, formula {chk.formula_perimeter}")

res = min_perimeter(13, beta)
print(f"\nN=13: P_min={res.min_perimeter}, optimal heights {res.optimal_heights}, window {res.search_window}")
c = build_explicit(13, res.optimal_heights[0])
print(render_ascii(c))
print("perimeter of the build:", perimeter(c), "=", perimeter(c).at(beta))

print("\nRescaled perimeter and shape discrepancy:")
for n in (10**2, 10**4, 10**6, 10**8):
    r = min_perimeter(n, beta)
    line = f"  N=1e{round(math.log10(n))}: P/sqrt(N) = {float(r.min_perimeter) / math.sqrt(n):.5f}"
    if n <= 10**5:
        line += f", Wulff discrepancy {wulff_discrepancy(build_explicit(n, r.optimal_heights[0]), beta):.4f}"
    print(line)
print(f"  limit 4*sqrt(4-2b) = {continuum_energy(beta):.5f}")
