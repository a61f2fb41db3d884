"""Tidy a scattered configuration into an admissible one and classify it.

Run: python3 demos/regularization.py
"""

import random

from bubblegrid import Configuration, Phase, canonical_form, classify, energy, is_admissible
from bubblegrid.regularize import regularize_columns, regularize_rows, remove_empty_lines
from bubblegrid.render import render_ascii

rng = random.Random(7)
points = {}
while len(points) < 16:
    points[(rng.randint(0, 7), rng.randint(0, 5))] = Phase.A if len(points) % 2 else Phase.B
c = Configuration(points)


def show(title: str, config: Configuration) -> None:
    rep = is_admissible(config)
    status = "admissible" if rep else "violates " + ", ".join(rep.violations)
    print(f"{title}: E={energy(config)} ({status})")
    print(render_ascii(config) + "\n")


show("start", c)
c = remove_empty_lines(c)
show("empty lines removed", c)
for step in range(5):
    nxt = regularize_columns(regularize_rows(remove_empty_lines(c)))
    if canonical_form(nxt) == canonical_form(c):
        break
    c = nxt
    show(f"rows and columns rearranged (pass {step + 1})", c)

if is_admissible(c):
    cls = classify(c)
    print(f"class {cls.label.value} with l={cls.params.l}, h={cls.params.hs}")
