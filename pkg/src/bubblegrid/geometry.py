"""Connectivity, the A-B interface, lattice isometries and canonical forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np
from scipy import signal

from .lattice import NEIGHBOURS, Configuration, Phase, check_coordinate

# The eight linear maps generated by the quarter turn (x, y) -> (-y, x) and
# the axis reflections, as row-major 2x2 integer matrices (a, b, c, d):
# (x, y) -> (a x + b y, c x + d y). Index 0 is the identity; indices 0-3 are
# rotations by 0, 90, 180, 270 degrees; 4-7 are the reflections.
POINT_GROUP = (
    (1, 0, 0, 1),
    (0, -1, 1, 0),
    (-1, 0, 0, -1),
    (0, 1, -1, 0),
    (-1, 0, 0, 1),   # x -> -x
    (0, 1, 1, 0),    # diagonal (x, y) -> (y, x)
    (1, 0, 0, -1),   # y -> -y
    (0, -1, -1, 0),  # anti-diagonal (x, y) -> (-y, -x)
)
_INDEX = {m: i for i, m in enumerate(POINT_GROUP)}


def _matmul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


class InterfacePoint(NamedTuple):
    """Midpoint of a unit A-B edge in doubled coordinates."""

    x2: int
    y2: int


@dataclass(frozen=True)
class Isometry:
    """``p -> M p + (dx, dy)`` with ``M = POINT_GROUP[group]``."""

    group: int = 0
    dx: int = 0
    dy: int = 0

    def __post_init__(self):
        if not 0 <= self.group < 8:
            raise ValueError("point-group index must be in 0..7")
        check_coordinate(self.dx)
        check_coordinate(self.dy)

    @property
    def matrix(self):
        return POINT_GROUP[self.group]

    def __call__(self, p):
        a, b, c, d = self.matrix
        x, y = p
        return (a * x + b * y + self.dx, c * x + d * y + self.dy)

    def compose(self, other: "Isometry") -> "Isometry":
        """``self ∘ other``: apply ``other`` first."""
        m = _matmul(self.matrix, other.matrix)
        tx, ty = self((other.dx, other.dy))
        return Isometry(_INDEX[m], tx, ty)

    def inverse(self) -> "Isometry":
        a, b, c, d = self.matrix
        inv = (a, c, b, d)  # orthogonal: inverse is the transpose
        ia, ib, ic, id_ = inv
        return Isometry(_INDEX[inv], -(ia * self.dx + ib * self.dy), -(ic * self.dx + id_ * self.dy))


IDENTITY = Isometry()


def is_connected(points: Iterable) -> bool:
    pts = set(points)
    if len(pts) <= 1:
        return True
    start = next(iter(pts))
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for dx, dy in NEIGHBOURS:
            q = (x + dx, y + dy)
            if q in pts and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(pts)


def components(points: Iterable) -> list[set]:
    pts = set(points)
    out = []
    while pts:
        start = pts.pop()
        comp = {start}
        queue = deque([start])
        while queue:
            x, y = queue.popleft()
            for dx, dy in NEIGHBOURS:
                q = (x + dx, y + dy)
                if q in pts:
                    pts.remove(q)
                    comp.add(q)
                    queue.append(q)
        out.append(comp)
    return out


def interface(config: Configuration) -> frozenset:
    out = set()
    B = config.B
    for x, y in config.A:
        for dx, dy in NEIGHBOURS:
            if (x + dx, y + dy) in B:
                out.add(InterfacePoint(2 * x + dx, 2 * y + dy))
    return frozenset(out)


def interface_adjacent(p: InterfacePoint, q: InterfacePoint) -> bool:
    """Distance 1/sqrt(2) or 1, with no lattice site on the segment."""
    dx, dy = p[0] - q[0], p[1] - q[1]
    d2 = dx * dx + dy * dy
    if d2 == 2:
        return True
    if d2 == 4:
        mx, my = (p[0] + q[0]) // 2, (p[1] + q[1]) // 2
        return not (mx % 2 == 0 and my % 2 == 0)
    return False


def interface_edges(points) -> list[tuple[InterfacePoint, InterfacePoint]]:
    pts = sorted(points)
    lookup = set(pts)
    edges = []
    for p in pts:
        for dx, dy in ((1, 1), (1, -1), (2, 0), (0, 2)):
            q = InterfacePoint(p[0] + dx, p[1] + dy)
            if q in lookup and interface_adjacent(p, q):
                edges.append((p, q))
    return edges


def _interface_connected(points) -> bool:
    pts = set(points)
    if len(pts) <= 1:
        return True
    adj = {p: [] for p in pts}
    for p, q in interface_edges(pts):
        adj[p].append(q)
        adj[q].append(p)
    start = next(iter(pts))
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        for q in adj[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(pts)


def _monotone_up_right(points) -> bool:
    # for every p, q: p.x > q.x implies p.y >= q.y
    # equivalently, the max y over columns with smaller x never exceeds the min y of the next column
    by_x: dict[int, list[int]] = {}
    for x, y in points:
        by_x.setdefault(x, []).append(y)
    running_max = None
    for x in sorted(by_x):
        ys = by_x[x]
        if running_max is not None and min(ys) < running_max:
            return False
        running_max = max(ys) if running_max is None else max(running_max, max(ys))
    return True


def interface_is_monotone_connected(config: Configuration) -> bool:
    pts = interface(config)
    if not _interface_connected(pts):
        return False
    for m in POINT_GROUP:
        a, b, c, d = m
        if _monotone_up_right([(a * x + b * y, c * x + d * y) for x, y in pts]):
            return True
    return False


def apply_isometry(config: Configuration, iso: Isometry) -> Configuration:
    return Configuration(((iso(p), ph) for p, ph in config.points.items()))


def _normalised_key(items) -> tuple:
    xs = [p[0] for p, _ in items]
    ys = [p[1] for p, _ in items]
    mx, my = min(xs), min(ys)
    return tuple(sorted((x - mx, y - my, ph.value) for (x, y), ph in items))


def canonical_form(config: Configuration, identify_phase_swap: bool = False) -> Configuration:
    """Lexicographically smallest translated point-group image.

    With ``identify_phase_swap`` and ``n_a == n_b`` the phase-relabelled
    images are included as well.
    """
    if len(config) == 0:
        return config
    base = list(config.points.items())
    variants = [base]
    if identify_phase_swap and config.n_a == config.n_b:
        variants.append([(p, ph.other()) for p, ph in base])
    best = None
    for items in variants:
        for a, b, c, d in POINT_GROUP:
            key = _normalised_key([((a * x + b * y, c * x + d * y), ph) for (x, y), ph in items])
            if best is None or key < best:
                best = key
    return Configuration((((x, y), Phase(ph)) for x, y, ph in best))


def canonical_key(config: Configuration, identify_phase_swap: bool = False) -> tuple:
    return tuple(sorted((x, y, ph.value) for (x, y), ph in canonical_form(config, identify_phase_swap).points.items()))


def _grids(config: Configuration, matrix):
    a, b, c, d = matrix
    pts = [((a * x + b * y, c * x + d * y), ph) for (x, y), ph in config.points.items()]
    xs = [p[0] for p, _ in pts]
    ys = [p[1] for p, _ in pts]
    x0, y0 = min(xs), min(ys)
    w, h = max(xs) - x0 + 1, max(ys) - y0 + 1
    ga = np.zeros((w, h))
    gb = np.zeros((w, h))
    for (x, y), ph in pts:
        (ga if ph is Phase.A else gb)[x - x0, y - y0] = 1.0
    return ga, gb, (x0, y0)


def _overlap(g1, g2):
    # overlap[i, j] = #{p : g1[p] = g2[p - shift]} over every shift with overlapping boxes
    method = "fft" if g1.size * g2.size > 4096 else "direct"
    return signal.correlate(g1, g2, mode="full", method=method)


def _symdiff_at(c1: Configuration, c2: Configuration, iso: Isometry) -> int:
    moved = apply_isometry(c2, iso)
    return len(c1.A ^ moved.A) + len(c1.B ^ moved.B)


def min_symmetric_difference(c1: Configuration, c2: Configuration, return_isometry: bool = False):
    """Minimum over isometries T of #(A1 △ T A2) + #(B1 △ T B2)."""
    if len(c1) == 0 or len(c2) == 0:
        raise ValueError("both configurations must be nonempty")
    upper = len(c1) + len(c2)  # disjoint placement
    a1, b1, (x1, y1) = _grids(c1, POINT_GROUP[0])
    best_val, best_iso = upper, None
    for g, m in enumerate(POINT_GROUP):
        a2, b2, (x2, y2) = _grids(c2, m)
        overlap = np.rint(_overlap(a1, a2) + _overlap(b1, b2)).astype(np.int64)
        i, j = np.unravel_index(int(np.argmax(overlap)), overlap.shape)
        val = upper - 2 * int(overlap[i, j])
        if val < best_val:
            # correlate 'full' index i corresponds to shifting grid 2 by i - (w2 - 1)
            sx = int(i) - (a2.shape[0] - 1)
            sy = int(j) - (a2.shape[1] - 1)
            iso = Isometry(g, x1 + sx - x2, y1 + sy - y2)
            exact = _symdiff_at(c1, c2, iso)
            if exact != val:
                raise ArithmeticError("FFT overlap disagrees with exact recount")
            best_val, best_iso = val, iso
    if best_iso is None:
        best_iso = Isometry(0, 0, 0)
    return (best_val, best_iso) if return_isometry else best_val
