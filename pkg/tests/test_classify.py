import itertools
import random

import pytest

from bubblegrid import (
    AffineInBeta,
    ClassLabel,
    ClassParams,
    Configuration,
    Isometry,
    NotAdmissible,
    Phase,
    apply_isometry,
    canonical_form,
    class_energy,
    classify,
    compactify_class1,
    energy,
    enumerate_minimisers,
    is_admissible,
    perimeter,
)
from bubblegrid.oracle import fixed_polyominoes
from bubblegrid.solver import build_class4_family, build_explicit, min_perimeter
from figures import FIG_33_STAIRCASE, FIG_33_STRAIGHT, FIG_34, FIG_44, FIG_55, cfg
from strategies import random_class1


def test_fig44_is_class_one():
    c = classify(FIG_44)
    assert c.label is ClassLabel.I
    assert (c.params.l1, c.params.l2, c.params.l3, c.params.h) == (2, 0, 2, 2)


def test_straight_interface_unequal_heights_is_class_two():
    assert classify(FIG_34[0]).label is ClassLabel.II


def test_class4_family_member():
    c = classify(build_class4_family("1/2", 1))
    assert c.label is ClassLabel.IV
    assert c.params.l == (2, 2, 2) and c.params.hs == (1, 3, 1)


def test_classify_returns_normalising_transform():
    c = build_class4_family("1/2", 1)
    res = classify(apply_isometry(c, Isometry(6, 3, -2)))
    assert res.label is ClassLabel.IV
    normal = apply_isometry(apply_isometry(c, Isometry(6, 3, -2)), res.isometry)
    if res.phase_swapped:
        normal = normal.swapped()
    xmin, _, ymin, _ = normal.bbox()
    assert (xmin, ymin) == (0, 0)


def test_class_energy_examples():
    assert class_energy(ClassLabel.I, ClassParams(2, 0, 2, 0, 2, 0, h=2), 4, 4) == AffineInBeta(-8, -2)
    e = class_energy(ClassLabel.IV, ClassParams(2, 2, 2, 1, 3, 1), 13, 13)
    assert e == AffineInBeta(-36, -5) and e.at("1/2") == -38.5
    n = 7
    assert class_energy(ClassLabel.I, ClassParams(n, 0, n, 0, 1, 0, h=1), n, n) == AffineInBeta(-4 * n + 2 * n + 1 + 1, -1)
    with pytest.raises(ValueError):
        class_energy(ClassLabel.NotAdmissible, ClassParams(), 1, 1)


def test_not_admissible_raises():
    with pytest.raises(NotAdmissible):
        classify(cfg([(0, 0)], [(3, 0)]))
    with pytest.raises(NotAdmissible):
        classify(cfg([(0, 0), (2, 0)], [(1, 0)]))


def all_admissible(max_points: int):
    for n in range(1, max_points + 1):
        for poly in fixed_polyominoes(n):
            cells = sorted(poly)
            for k in range(n + 1):
                for a in itertools.combinations(range(n), k):
                    chosen = set(a)
                    c = Configuration([(cells[i], Phase.A if i in chosen else Phase.B) for i in range(n)])
                    if is_admissible(c):
                        yield c


def test_classify_is_total_and_formula_holds():
    seen = set()
    rng = random.Random(4)
    for c in all_admissible(6):
        res = classify(c, check=False)
        seen.add(res.label)
        assert class_energy(res.label, res.params, c.n_a, c.n_b) == energy(c)
        iso = Isometry(rng.randrange(8), rng.randint(-3, 3), rng.randint(-3, 3))
        assert classify(apply_isometry(c, iso), check=False).label is res.label
    assert seen == {ClassLabel.I, ClassLabel.II, ClassLabel.III, ClassLabel.IV, ClassLabel.V}


def test_figure_minimisers_classes():
    labels = sorted(classify(c).label.value for c in FIG_55)
    assert labels == ["I", "I", "I", "IV", "IV"]


def test_compactify_staircase():
    out = compactify_class1(FIG_33_STAIRCASE)
    assert perimeter(out) == perimeter(FIG_33_STAIRCASE)
    res = classify(out)
    assert res.label is ClassLabel.I and res.params.l2 <= 1
    assert canonical_form(out) in {canonical_form(FIG_33_STAIRCASE), canonical_form(FIG_33_STRAIGHT)}


def test_compactify_fixed_point_on_explicit_build():
    for n in (4, 5, 9, 13, 30):
        h = min_perimeter(n, "1/2").optimal_heights[0]
        c = build_explicit(n, h)
        out = compactify_class1(c, "1/2")
        assert canonical_form(out) == canonical_form(c)
    # away from the optimal height a mixed column can win
    c = build_explicit(13, 4)
    assert perimeter(compactify_class1(c)) == AffineInBeta(32, -10)


def test_compactify_reduces_wide_staircase():
    rng = random.Random(31)
    for _ in range(40):
        h = rng.randint(6, 9)
        c = random_class1(rng, h, width=rng.randint(9, 12), l2=5)
        res = classify(c)
        assert res.label is ClassLabel.I and res.params.l2 == 5
        out = compactify_class1(c)
        assert (out.n_a, out.n_b) == (c.n_a, c.n_b)
        assert classify(out).params.l2 <= 1
        p_in, p_out = perimeter(c), perimeter(out)
        assert p_out.c0 <= p_in.c0 and p_out.c0 + p_out.c1 <= p_in.c0 + p_in.c1
        assert p_out.compare(p_in, "1/2") < 0


def test_compactify_with_beta_never_worse():
    rng = random.Random(32)
    for _ in range(40):
        c = random_class1(rng, rng.randint(2, 6), width=rng.randint(4, 9), l2=rng.randint(0, 3))
        for beta in ("1/4", "1/2", "3/4"):
            out = compactify_class1(c, beta)
            assert perimeter(out).compare(perimeter(c), beta) <= 0
            assert classify(out).params.l2 <= 1


def test_compactify_rejects_other_classes():
    with pytest.raises(ValueError):
        compactify_class1(FIG_34[0])


def test_oracle_minimisers_class_constraints():
    for n in range(1, 6):
        for beta in ("1/4", "1/2"):
            for c in enumerate_minimisers(n, n, beta).minimisers_no_swap:
                res = classify(c)
                assert res.label not in (ClassLabel.II, ClassLabel.III)
                if res.label is ClassLabel.I:
                    assert res.params.l2 in (0, 1)
                if res.label in (ClassLabel.IV, ClassLabel.V):
                    b = float(beta.split("/")[0]) / float(beta.split("/")[1])
                    assert res.params.l2 <= 6
                    assert res.params.h1 <= 4 + 1 / b
                    assert res.params.h3 <= 2
