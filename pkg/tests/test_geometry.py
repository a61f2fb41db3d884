import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bubblegrid import (
    Configuration,
    Isometry,
    Phase,
    apply_isometry,
    bond_counts,
    canonical_form,
    energy,
    interface,
    interface_is_monotone_connected,
    is_connected,
    min_symmetric_difference,
    perimeter,
)
from bubblegrid.geometry import POINT_GROUP, InterfacePoint, interface_adjacent
from bubblegrid.solver import build_class4_family, build_explicit, min_perimeter
from figures import FIG_33_STAIRCASE, FIG_33_STRAIGHT, FIG_44, INTERFACE_EXAMPLE, cfg
from strategies import configurations, random_clump, random_configuration

isometries = st.builds(Isometry, st.integers(0, 7), st.integers(-20, 20), st.integers(-20, 20))


def test_is_connected_examples():
    assert is_connected({(0, 0), (1, 0), (1, 1)})
    assert not is_connected({(0, 0), (2, 0)})
    assert is_connected({(0, 0)})
    assert is_connected(set())


def test_interface_examples():
    assert interface(cfg([(0, 0)], [(1, 0)])) == {InterfacePoint(1, 0)}
    pts = sorted(interface(FIG_44))
    assert len(pts) == 2
    (x1, y1), (x2, y2) = pts
    assert x1 == x2 and abs(y1 - y2) == 2
    assert interface(cfg([(0, 0), (1, 0)], [])) == frozenset()
    assert interface(cfg([], [(0, 0)])) == frozenset()


def test_interface_points_have_one_odd_coordinate():
    rng = random.Random(3)
    for _ in range(200):
        for p in interface(random_configuration(rng, 25)):
            assert (p.x2 % 2) + (p.y2 % 2) == 1


def test_interface_adjacency_rule():
    # diagonal neighbours at distance 1/sqrt(2)
    assert interface_adjacent(InterfacePoint(1, 0), InterfacePoint(2, 1))
    # collinear at distance 1 across a cell edge midpoint: (1,0) and (1,2) pass through (1,1), not a lattice point
    assert interface_adjacent(InterfacePoint(1, 0), InterfacePoint(1, 2))
    # (0,1) -> (2,1) passes through (1,1) in doubled coords = (0.5,0.5): fine
    assert interface_adjacent(InterfacePoint(0, 1), InterfacePoint(2, 1))
    # (1,0) -> (3,0) passes through the lattice site (1,0)
    assert not interface_adjacent(InterfacePoint(1, 0), InterfacePoint(3, 0))
    assert not interface_adjacent(InterfacePoint(1, 0), InterfacePoint(5, 0))


def test_monotone_interface_examples():
    assert interface_is_monotone_connected(FIG_44)
    assert interface_is_monotone_connected(INTERFACE_EXAMPLE)
    # A on both sides of B: the two interface points are separated by the B site
    assert not interface_is_monotone_connected(cfg([(0, 0), (2, 0)], [(1, 0)]))
    # connected but not monotone: B wedged into a notch of A
    assert not interface_is_monotone_connected(cfg([(0, 0), (1, 1), (2, 0)], [(1, 0)]))


def test_apply_isometry_examples():
    c = cfg([(1, 0)], [])
    assert apply_isometry(c, Isometry()) == c
    assert apply_isometry(c, Isometry(1)) == cfg([(0, 1)], [])
    refl = Isometry(4)
    assert apply_isometry(apply_isometry(FIG_44, refl), refl) == FIG_44
    with pytest.raises(OverflowError):
        apply_isometry(c, Isometry(0, 2**63 - 1, 0))


def test_group_closure_and_inverses():
    isos = [Isometry(g, dx, dy) for g in range(8) for dx, dy in ((0, 0), (2, -1))]
    p = (3, -7)
    for s in isos:
        assert s.inverse()(s(p)) == p
        for t in isos:
            assert s.compose(t)(p) == s(t(p))


@settings(max_examples=150, deadline=None)
@given(configurations(max_points=20), isometries)
def test_invariance_under_isometries(c, iso):
    moved = apply_isometry(c, iso)
    assert bond_counts(moved) == bond_counts(c)
    assert energy(moved) == energy(c)
    assert perimeter(moved) == perimeter(c)
    assert canonical_form(moved) == canonical_form(c)


def test_invariance_1000_random():
    rng = random.Random(11)
    for _ in range(1000):
        c = random_configuration(rng, 20)
        iso = Isometry(rng.randrange(8), rng.randint(-50, 50), rng.randint(-50, 50))
        moved = apply_isometry(c, iso)
        assert energy(moved) == energy(c) and perimeter(moved) == perimeter(c)


def test_canonical_form_examples():
    assert canonical_form(FIG_44) == canonical_form(FIG_44.translated(5, -3))
    assert canonical_form(FIG_44) == canonical_form(apply_isometry(FIG_44, Isometry(1)))
    assert canonical_form(FIG_33_STRAIGHT) != canonical_form(FIG_33_STAIRCASE)
    c = canonical_form(FIG_33_STAIRCASE)
    assert canonical_form(c) == c


def test_canonical_form_phase_swap():
    c = cfg([(0, 0), (0, 1)], [(1, 0), (2, 0)])
    assert canonical_form(c) != canonical_form(c.swapped())
    assert canonical_form(c, True) == canonical_form(c.swapped(), True)
    # unequal counts: the flag has no effect
    d = cfg([(0, 0)], [(1, 0), (2, 0)])
    assert canonical_form(d, True) == canonical_form(d)


def test_canonical_form_orbit_200_random():
    rng = random.Random(5)
    for _ in range(200):
        c = random_configuration(rng, 15, min_points=1)
        iso = Isometry(rng.randrange(8), rng.randint(-9, 9), rng.randint(-9, 9))
        assert canonical_form(apply_isometry(c, iso)) == canonical_form(c)


def brute_symdiff(c1: Configuration, c2: Configuration) -> int:
    best = len(c1) + len(c2)
    x0, x1, y0, y1 = c1.bbox()
    for g in range(8):
        base = apply_isometry(c2, Isometry(g))
        u0, u1, v0, v1 = base.bbox()
        for dx in range(x0 - u1, x1 - u0 + 1):
            for dy in range(y0 - v1, y1 - v0 + 1):
                m = base.translated(dx, dy)
                best = min(best, len(c1.A ^ m.A) + len(c1.B ^ m.B))
    return best


def test_symdiff_examples():
    assert min_symmetric_difference(FIG_44, FIG_44) == 0
    assert min_symmetric_difference(FIG_44, apply_isometry(FIG_44, Isometry(4, 3, 1))) == 0
    with pytest.raises(ValueError):
        min_symmetric_difference(Configuration(), FIG_44)


def test_symdiff_class4_vs_explicit():
    fam = build_class4_family("1/2", 1)
    h = min_perimeter(13, "1/2").optimal_heights[0]
    exp = build_explicit(13, h)
    value = min_symmetric_difference(fam, exp)
    assert value == brute_symdiff(fam, exp)
    assert 0 < value <= 26


def test_symdiff_matches_brute_force():
    rng = random.Random(8)
    for _ in range(60):
        c1 = random_clump(rng, rng.randint(1, 9))
        c2 = random_clump(rng, rng.randint(1, 9))
        d, iso = min_symmetric_difference(c1, c2, return_isometry=True)
        assert d == brute_symdiff(c1, c2)
        m = apply_isometry(c2, iso)
        assert len(c1.A ^ m.A) + len(c1.B ^ m.B) == d
        assert min_symmetric_difference(c2, c1) == d


def test_symdiff_zero_iff_same_canonical_form():
    rng = random.Random(9)
    for _ in range(100):
        c1 = random_clump(rng, rng.randint(1, 6))
        if rng.random() < 0.5:
            c2 = apply_isometry(c1, Isometry(rng.randrange(8), rng.randint(-4, 4), rng.randint(-4, 4)))
        else:
            c2 = random_clump(rng, len(c1))
        same = canonical_form(c1) == canonical_form(c2)
        assert (min_symmetric_difference(c1, c2) == 0) == same


def test_point_group_is_closed():
    from bubblegrid.geometry import _matmul

    for m in POINT_GROUP:
        for n in POINT_GROUP:
            assert _matmul(m, n) in POINT_GROUP


def test_phase_preserved_by_isometry():
    c = cfg([(0, 0)], [(1, 0)])
    moved = apply_isometry(c, Isometry(3, 4, 4))
    assert moved.n_a == 1 and moved.n_b == 1
    assert moved.phase_at(Isometry(3, 4, 4)((0, 0))) is Phase.A
