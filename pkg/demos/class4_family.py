"""The staggered Class IV family next to the straight-interface builds.

At beta = 1/2 and k = 1 (13 points per phase) the staggered configuration is a
genuine minimiser. For larger k a near-square straight build is strictly better.

Run: python3 demos/class4_family.py
"""

import math

from bubblegrid import classify, min_symmetric_difference, perimeter
from bubblegrid.render import render_ascii
from bubblegrid.solver import build_class4_family, build_explicit, min_perimeter

beta = "1/2"
fam = build_class4_family(beta, 1)
print(render_ascii(fam))
cls = classify(fam)
print(f"class {cls.label.value}, l={cls.params.l}, h={cls.params.hs}, P={perimeter(fam).at(beta)}")

print("\n k     N  family  P_min  heights        symdiff/sqrt(N)")
for k in (1, 2, 3, 5, 10):
    fam = build_class4_family(beta, k)
    n = fam.n_a
    res = min_perimeter(n, beta)
    h = min(res.optimal_heights, key=lambda h: abs(h - (4 * k + 1)))
    d = min_symmetric_difference(fam, build_explicit(n, h))
    print(f"{k:2d} {n:5d}  {str(perimeter(fam).at(beta)):>6}  {str(res.min_perimeter):>5}  "
          f"{str(res.optimal_heights):<13}  {d / math.sqrt(n):.3f}")
