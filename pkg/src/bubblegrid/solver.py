"""Closed-form minimal perimeter for N_A = N_B = N, its explicit minimisers,
the Class IV optimal family, and continuum (Wulff) diagnostics.

For a height ``h`` the best straight-interface configuration has perimeter
``4*ceil(N/h) + (4 - 2*beta)*h``; the global minimum over ``h`` only needs the
integer window around ``sqrt(2N/(2-beta))`` derived in ``height_window``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .geometry import POINT_GROUP
from .lattice import (
    AffineInBeta,
    Beta,
    BetaLike,
    Configuration,
    Phase,
    as_beta,
)

HALF = Fraction(1, 2)


def height_perimeter(n: int, h: int) -> AffineInBeta:
    """``4*ceil(n/h) + (4 - 2*beta)*h``."""
    return AffineInBeta(4 * (-(-n // h)) + 4 * h, -2 * h)


@dataclass(frozen=True)
class SolveResult:
    n: int
    beta: Beta
    min_perimeter: Union[Fraction, float]
    optimal_heights: tuple[int, ...]
    hbar: float
    search_window: tuple[int, int]
    certified: bool  # False when beta > 1/2: the formula is evaluated, not proved optimal

    @property
    def perimeters(self) -> tuple[AffineInBeta, ...]:
        return tuple(height_perimeter(self.n, h) for h in self.optimal_heights)


def height_window(n: int, beta: BetaLike) -> tuple[int, int]:
    """Integer hull of ``2/(2-b) + hbar +- 2/(2-b) * sqrt(1 + sqrt(2N(2-b)))``, clamped to ``[1, N]``."""
    b = float(as_beta(beta))
    t = 2.0 / (2.0 - b)
    hbar = math.sqrt(2.0 * n / (2.0 - b))
    half = t * math.sqrt(1.0 + math.sqrt(2.0 * n * (2.0 - b)))
    lo = max(1, math.floor(t + hbar - half))
    hi = min(n, math.ceil(t + hbar + half))
    return lo, max(lo, hi)


def _argmin_heights(n: int, beta: Beta, hs) -> tuple[list[int], Union[Fraction, float]]:
    best: list[int] = []
    best_p = None
    for h in hs:
        p = height_perimeter(n, h)
        c = -1 if best_p is None else p.compare(best_p, beta)
        if c < 0:
            best, best_p = [h], p
        elif c == 0:
            best.append(h)
    return best, best_p.at(beta)


def min_perimeter(n: int, beta: BetaLike) -> SolveResult:
    if not isinstance(n, int) or n < 1:
        raise ValueError("N must be a positive integer")
    b = as_beta(beta)
    lo, hi = height_window(n, b)
    heights, value = _argmin_heights(n, b, range(lo, hi + 1))
    return SolveResult(
        n=n,
        beta=b,
        min_perimeter=value,
        optimal_heights=tuple(heights),
        hbar=math.sqrt(2 * n / (2 - float(b))),
        search_window=(lo, hi),
        certified=b.value <= HALF,
    )


def min_perimeter_full_scan(n: int, beta: BetaLike) -> tuple[tuple[int, ...], Union[Fraction, float]]:
    """Reference scan over every ``h`` in ``[1, N]``."""
    b = as_beta(beta)
    heights, value = _argmin_heights(n, b, range(1, n + 1))
    return tuple(heights), value


# -- explicit minimisers ------------------------------------------------------


@dataclass(frozen=True)
class ColumnRun:
    """``count`` identical adjacent columns of one phase covering ``y0..y1``."""

    count: int
    phase: Phase
    y0: int
    y1: int


def explicit_runs(n: int, h: int) -> tuple[int, list[ColumnRun]]:
    """Column runs of the straight build, left to right, and the x of the first run."""
    if not isinstance(h, int) or h < 1:
        raise ValueError("h must be a positive integer")
    if not isinstance(n, int) or n < 1:
        raise ValueError("N must be a positive integer")
    ell, r = divmod(n, h)
    if ell == 0:
        raise ValueError(f"h={h} exceeds N={n}: the split N = h*l + r needs l >= 1")
    runs = []
    if r:
        runs.append(ColumnRun(1, Phase.A, 1, r))
    runs += [ColumnRun(ell, Phase.A, 1, h), ColumnRun(ell, Phase.B, 1, h)]
    if r:
        runs.append(ColumnRun(1, Phase.B, 1, r))
    x_start = -ell if r else -ell + 1
    return x_start, runs


def materialise_runs(x_start: int, runs) -> Configuration:
    pts = []
    x = x_start
    for run in runs:
        for _ in range(run.count):
            pts += [((x, y), run.phase) for y in range(run.y0, run.y1 + 1)]
            x += 1
    return Configuration(pts)


def build_explicit(n: int, h: int) -> Configuration:
    """Straight-interface minimiser of height ``h``.

    With ``N = h*l + r``: A fills ``[-l+1, 0] x [1, h]`` plus ``{-l} x [1, r]``,
    B is its mirror image ``[1, l] x [1, h]`` plus ``{l+1} x [1, r]``.
    """
    return materialise_runs(*explicit_runs(n, h))


def run_bond_counts(counts, is_a, y0, y1):
    """Vectorised bond counts for a batch of column-run configurations.

    Arguments are integer arrays of shape ``(batch, R)``; zero-count runs may
    only sit at the two ends of a row. Returns ``(intra_A, intra_B, cross,
    boundary_A, boundary_B)`` as arrays of shape ``(batch,)``.
    """
    counts = np.asarray(counts, dtype=np.int64)
    is_a = np.asarray(is_a, dtype=bool)
    y0 = np.asarray(y0, dtype=np.int64)
    y1 = np.asarray(y1, dtype=np.int64)
    length = y1 - y0 + 1
    present = counts > 0
    # present runs must be contiguous, else an empty run would hide a gap
    idx = np.arange(counts.shape[1])
    first = np.where(present, idx, counts.shape[1]).min(1)
    last = np.where(present, idx, -1).max(1)
    if (present.sum(1) != np.maximum(last - first + 1, 0)).any():
        raise ValueError("zero-count runs are only allowed at the ends")
    within = np.where(present, counts * (length - 1) + (counts - 1) * length, 0)
    overlap = np.minimum(y1[:, :-1], y1[:, 1:]) - np.maximum(y0[:, :-1], y0[:, 1:]) + 1
    overlap = np.where(present[:, :-1] & present[:, 1:], np.maximum(overlap, 0), 0)
    same = is_a[:, :-1] == is_a[:, 1:]
    intra_a = (within * is_a).sum(1) + (overlap * (same & is_a[:, :-1])).sum(1)
    intra_b = (within * ~is_a).sum(1) + (overlap * (same & ~is_a[:, :-1])).sum(1)
    cross = (overlap * ~same).sum(1)
    n_a = (counts * length * is_a).sum(1)
    n_b = (counts * length * ~is_a).sum(1)
    return intra_a, intra_b, cross, 4 * n_a - 2 * intra_a - cross, 4 * n_b - 2 * intra_b - cross


def explicit_perimeters(n: int, hs) -> tuple[np.ndarray, np.ndarray]:
    """``(c0, c1)`` of the perimeter of ``build_explicit(n, h)`` for every h in ``hs``.

    Bonds are counted from the column-run description used by
    ``build_explicit``, without materialising points.
    """
    hs = np.asarray(hs, dtype=np.int64)
    ell, r = np.divmod(n, hs)
    if (ell < 1).any():
        raise ValueError("every h must satisfy 1 <= h <= N")
    part = (r > 0).astype(np.int64)
    one = np.ones_like(hs)
    counts = np.stack([part, ell, ell, part], 1)
    is_a = np.tile(np.array([True, True, False, False]), (len(hs), 1))
    y0 = np.stack([one, one, one, one], 1)
    y1 = np.stack([np.maximum(r, 1), hs, hs, np.maximum(r, 1)], 1)
    _, _, cross, ba, bb = run_bond_counts(counts, is_a, y0, y1)
    return ba + bb + 2 * cross, -2 * cross


# -- Class IV family -----------------------------------------------------------


def class4_ratio(beta: BetaLike) -> tuple[int, int]:
    """Reduced ``(r, s)`` with ``r/s = 1 - beta/2``."""
    b = as_beta(beta)
    if not b.exact:
        raise ValueError("the Class IV family needs an exact rational beta")
    if b.value > HALF:
        raise ValueError("the Class IV family is defined for beta <= 1/2")
    f = 1 - b.value / 2
    return f.numerator, f.denominator


def build_class4_family(beta: BetaLike, k: int) -> Configuration:
    """A = ``[-kr+1, 0] x [1, ks]`` + ``(1, ks)``; B = ``[1, kr] x [0, ks-1]`` + ``(0, 0)``."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    r, s = class4_ratio(beta)
    a = [(x, y) for x in range(-k * r + 1, 1) for y in range(1, k * s + 1)] + [(1, k * s)]
    b = [(x, y) for x in range(1, k * r + 1) for y in range(0, k * s)] + [(0, 0)]
    return Configuration.from_sets(a, b)


def class4_family_perimeter(beta: BetaLike, k: int) -> AffineInBeta:
    """``4kr + 2(ks+1) + 2(1-beta)(ks+1)``."""
    r, s = class4_ratio(beta)
    t = k * s + 1
    return AffineInBeta(4 * k * r + 4 * t, -2 * t)


# -- continuum diagnostics -----------------------------------------------------


@dataclass(frozen=True)
class Rect:
    x0: float
    x1: float
    y0: float
    y1: float

    @property
    def area(self) -> float:
        return (self.x1 - self.x0) * (self.y1 - self.y0)

    def contains(self, x, y, margin: float = 0.0):
        return (
            (x >= self.x0 - margin) & (x <= self.x1 + margin) & (y >= self.y0 - margin) & (y <= self.y1 + margin)
        )


def wulff_rectangles(beta: BetaLike) -> tuple[Rect, Rect]:
    b = float(as_beta(beta))
    w = math.sqrt((2 - b) / 2)
    hgt = math.sqrt(2 / (2 - b))
    return Rect(-w, 0.0, 0.0, hgt), Rect(0.0, w, 0.0, hgt)


def continuum_energy(beta: BetaLike) -> float:
    """Limit of ``P_min(N) / sqrt(N)``: ``4*sqrt(4 - 2*beta)``."""
    b = as_beta(beta)
    if b.value > HALF:
        raise ValueError("the continuum value is established only for beta <= 1/2")
    return 4 * math.sqrt(4 - 2 * float(b))


def wulff_discrepancy(config: Configuration, beta: BetaLike) -> float:
    """Fraction of points outside their phase's Wulff rectangle after rescaling.

    Points are scaled by ``1/sqrt(N)``, the union centroid is moved onto the
    centroid of the two rectangles, and each rectangle is dilated by
    ``N**-0.25``. The worse phase is reported, minimised over the eight
    lattice orientations.
    """
    if config.n_a != config.n_b or config.n_a == 0:
        raise ValueError("wulff_discrepancy needs N_A = N_B >= 1")
    n = config.n_a
    ra, rb = wulff_rectangles(beta)
    margin = n ** -0.25
    pa = np.array(sorted(config.A), dtype=float)
    pb = np.array(sorted(config.B), dtype=float)
    best = 1.0
    for a, b, c, d in POINT_GROUP:
        m = np.array([[a, b], [c, d]], dtype=float)
        qa, qb = pa @ m.T, pb @ m.T
        centre = np.vstack([qa, qb]).mean(0)
        shift = np.array([0.0, ra.y1 / 2]) - centre / math.sqrt(n)
        qa = qa / math.sqrt(n) + shift
        qb = qb / math.sqrt(n) + shift
        out_a = 1 - ra.contains(qa[:, 0], qa[:, 1], margin).mean()
        out_b = 1 - rb.contains(qb[:, 0], qb[:, 1], margin).mean()
        best = min(best, float(max(out_a, out_b)))
    return best
