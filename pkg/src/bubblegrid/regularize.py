"""Row/inter-row energy decomposition, its lower bounds, and the rearrangement
procedure that stacks rows into contiguous A-then-B blocks.

Rows are indexed ``k = 1..N_row`` from the top: row 1 is the maximal occupied
y and row ``N_row`` the minimal one, so an empty row strictly inside the
bounding box still gets an index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import interface_is_monotone_connected, is_connected
from .lattice import AffineInBeta, Configuration, Phase


@dataclass(frozen=True)
class RowProfile:
    """Per-row counts ``(n_k, m_k)`` from the top row down."""

    n: tuple[int, ...]
    m: tuple[int, ...]

    @classmethod
    def of(cls, config: Configuration) -> "RowProfile":
        if len(config) == 0:
            return cls((), ())
        _, _, ymin, ymax = config.bbox()
        n = [0] * (ymax - ymin + 1)
        m = [0] * (ymax - ymin + 1)
        for (x, y), ph in config.points.items():
            k = ymax - y
            if ph is Phase.A:
                n[k] += 1
            else:
                m[k] += 1
        return cls(tuple(n), tuple(m))

    def __len__(self) -> int:
        return len(self.n)


def _row_y(config: Configuration, k: int, n_rows_needed: int = 1) -> int:
    if len(config) == 0:
        raise IndexError("empty configuration has no rows")
    _, _, ymin, ymax = config.bbox()
    n_row = ymax - ymin + 1
    if not 1 <= k <= n_row - (n_rows_needed - 1):
        raise IndexError(f"row index {k} out of range")
    return ymax - (k - 1)


def _bond(p1: Phase, p2: Phase) -> AffineInBeta:
    return AffineInBeta(-1, 0) if p1 is p2 else AffineInBeta(0, -1)


def row_energy(config: Configuration, k: int) -> AffineInBeta:
    y = _row_y(config, k)
    total = AffineInBeta(0, 0)
    for (x, yy), ph in config.points.items():
        if yy != y:
            continue
        other = config.phase_at((x + 1, y))
        if other is not None:
            total = total + _bond(ph, other)
    return total


def inter_row_energy(config: Configuration, k: int) -> AffineInBeta:
    y = _row_y(config, k, n_rows_needed=2)
    total = AffineInBeta(0, 0)
    for (x, yy), ph in config.points.items():
        if yy != y:
            continue
        other = config.phase_at((x, y - 1))
        if other is not None:
            total = total + _bond(ph, other)
    return total


def row_energy_bound(n: int, m: int) -> AffineInBeta:
    if n < 0 or m < 0:
        raise ValueError("row counts must be nonnegative")
    if n > 0 and m > 0:
        return AffineInBeta(-(n + m) + 2, -1)
    if n + m > 0:
        return AffineInBeta(-(n + m) + 1, 0)
    return AffineInBeta(0, 0)


def inter_row_energy_bound(n_k: int, m_k: int, n_k1: int, m_k1: int) -> AffineInBeta:
    """``-(1-beta)(min n + min m) - beta * min(total)``."""
    if min(n_k, m_k, n_k1, m_k1) < 0:
        raise ValueError("row counts must be nonnegative")
    a = min(n_k, n_k1) + min(m_k, m_k1)
    c = min(n_k + m_k, n_k1 + m_k1)
    return AffineInBeta(-a, a - c)


def _is_interval(xs) -> bool:
    xs = sorted(xs)
    return not xs or xs[-1] - xs[0] + 1 == len(xs)


def row_bound_equality_conditions(config: Configuration, k: int) -> bool:
    """A, B and their union are each contiguous within row ``k``."""
    y = _row_y(config, k)
    a = [x for (x, yy) in config.A if yy == y]
    b = [x for (x, yy) in config.B if yy == y]
    return _is_interval(a) and _is_interval(b) and _is_interval(a + b)


def inter_row_equality_conditions(config: Configuration, k: int) -> tuple[bool, bool, bool]:
    """The three matching conditions for rows ``k`` and ``k+1``, counted literally.

    (1) ``min(n_k, n_{k+1})`` A-points of row k sit directly above A-points of
    row k+1; (2) the same for B; (3) every point of the shorter row has an
    occupied site directly across.
    """
    y = _row_y(config, k, n_rows_needed=2)
    upper = {x: ph for (x, yy), ph in config.points.items() if yy == y}
    lower = {x: ph for (x, yy), ph in config.points.items() if yy == y - 1}
    n_k = sum(ph is Phase.A for ph in upper.values())
    m_k = len(upper) - n_k
    n_k1 = sum(ph is Phase.A for ph in lower.values())
    m_k1 = len(lower) - n_k1
    aa = sum(1 for x, ph in upper.items() if ph is Phase.A and lower.get(x) is Phase.A)
    bb = sum(1 for x, ph in upper.items() if ph is Phase.B and lower.get(x) is Phase.B)
    if len(upper) >= len(lower):
        c3 = all(x in upper for x in lower)
    else:
        c3 = all(x in lower for x in upper)
    return aa == min(n_k, n_k1), bb == min(m_k, m_k1), c3


def _transpose(config: Configuration) -> Configuration:
    return Configuration((((y, x), ph) for (x, y), ph in config.points.items()))


def _close_row_gaps_once(config: Configuration):
    """Close the topmost empty interior row; returns None if there is none."""
    if len(config) == 0:
        return None
    rows = sorted({y for _, y in config.points}, reverse=True)
    for upper, lower in zip(rows, rows[1:]):
        gap = upper - lower - 1
        if gap == 0:
            continue
        # lift every point at or below `lower` by `gap`
        pts = {}
        for (x, y), ph in config.points.items():
            pts[(x, y + gap if y <= lower else y)] = ph
        shifted = Configuration(pts)
        junction_lo = lower + gap  # == upper - 1
        has_bond = any((x, junction_lo) in shifted for (x, y) in shifted.points if y == upper)
        if not has_bond:
            up_min = min(x for (x, y) in shifted.points if y == upper)
            lo_min = min(x for (x, y) in shifted.points if y == junction_lo)
            dx = lo_min - up_min
            shifted = Configuration(
                (((x + dx, y) if y >= upper else (x, y), ph) for (x, y), ph in shifted.points.items())
            )
        return shifted
    return None


def remove_empty_lines(config: Configuration) -> Configuration:
    """Delete empty interior rows and columns, joining the two blocks by a bond.

    Each merge adds at least one bond, so energy strictly drops whenever an
    empty interior line existed; the loop stops once rows and columns are
    both gap-free.
    """
    current = config
    while True:
        changed = False
        while (nxt := _close_row_gaps_once(current)) is not None:
            current, changed = nxt, True
        while (nxt := _close_row_gaps_once(_transpose(current))) is not None:
            current, changed = _transpose(nxt), True
        if not changed:
            return current


def regularize_rows(config: Configuration) -> Configuration:
    """Rebuild every row as an A-block followed by a B-block, keeping its counts.

    Each row is described by a split coordinate ``s``: A fills
    ``[s - n, s - 1]`` and B fills ``[s, s + m - 1]``. The first row starts
    with its leftmost A-point at ``x = 0``; each later row derives its split
    from the row above through the four count comparisons.
    """
    if len(config) == 0:
        return config
    prof = RowProfile.of(config)
    if any(n + m == 0 for n, m in zip(prof.n, prof.m)):
        raise ValueError("regularize_rows requires a configuration without empty interior rows")
    _, _, _, ymax = config.bbox()
    s = prof.n[0]
    splits = [s]
    for k in range(len(prof) - 1):
        n0, m0, n1, m1 = prof.n[k], prof.m[k], prof.n[k + 1], prof.m[k + 1]
        if (n0 <= n1 and m0 <= m1) or (n0 > n1 and m0 > m1):
            pass
        elif n0 <= n1:  # m0 > m1
            if n0 + m0 >= n1 + m1:
                s = s + (n1 - n0)
            else:
                s = s + (m0 - m1)
        else:  # n0 > n1, m0 <= m1
            if n0 + m0 >= n1 + m1:
                s = s - (m1 - m0)
            else:
                s = s - (n0 - n1)
        splits.append(s)
    pts = []
    for k, s in enumerate(splits):
        y = ymax - k
        pts += [((x, y), Phase.A) for x in range(s - prof.n[k], s)]
        pts += [((x, y), Phase.B) for x in range(s, s + prof.m[k])]
    return Configuration(pts)


def regularize_columns(config: Configuration) -> Configuration:
    return _transpose(regularize_rows(_transpose(config)))


@dataclass
class AdmissibilityReport:
    admissible: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.admissible


def _lines(points, axis: int) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for p in points:
        out.setdefault(p[axis], []).append(p[1 - axis])
    return out


def _one_sided(config: Configuration, axis: int) -> bool:
    la, lb = _lines(config.A, axis), _lines(config.B, axis)
    signs = set()
    for key in la.keys() & lb.keys():
        a, b = la[key], lb[key]
        if max(a) < min(b):
            signs.add(-1)
        elif max(b) < min(a):
            signs.add(1)
        else:
            return False
    return len(signs) <= 1


def is_admissible(config: Configuration) -> AdmissibilityReport:
    """Check the structural properties every minimiser has.

    Clauses: ``connected`` (A, B, union), ``row_interval`` /
    ``column_interval``, ``no_missing_rows`` / ``no_missing_columns`` per
    phase, ``one_sided_rows`` / ``one_sided_columns``, and
    ``monotone_interface``.
    """
    bad = []
    if not (is_connected(config.A) and is_connected(config.B) and is_connected(config.union())):
        bad.append("connected")
    for axis, name in ((1, "row"), (0, "column")):
        sets = (config.A, config.B, config.union())
        if not all(_is_interval(v) for s in sets for v in _lines(s, axis).values()):
            bad.append(f"{name}_interval")
        if not all(_is_interval(_lines(s, axis).keys()) for s in (config.A, config.B)):
            bad.append(f"no_missing_{name}s")
        if not _one_sided(config, axis):
            bad.append(f"one_sided_{name}s")
    if not interface_is_monotone_connected(config):
        bad.append("monotone_interface")
    return AdmissibilityReport(not bad, bad)
