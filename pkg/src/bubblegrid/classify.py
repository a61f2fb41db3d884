"""Class I-V taxonomy of admissible configurations and Class I compaction.

Each column (left to right) and row (top to bottom) gets a type letter:
``a`` holds only A-points, ``b`` only B-points, ``x`` both. The classes are
regular-expression conditions on these two words, tested over the eight
point-group images and, last, the phase-swapped images.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .geometry import POINT_GROUP, Isometry, apply_isometry
from .lattice import AffineInBeta, BetaLike, Configuration, Phase, perimeter
from .regularize import is_admissible


class ClassLabel(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    NotAdmissible = "NotAdmissible"


class NotAdmissible(ValueError):
    """Raised when a configuration fails the structural preconditions."""

    def __init__(self, violations):
        super().__init__("configuration is not admissible: " + ", ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class ClassParams:
    l1: int = 0
    l2: int = 0
    l3: int = 0
    h1: int = 0
    h2: int = 0
    h3: int = 0
    h: Optional[int] = None  # total height, Class I only

    def __post_init__(self):
        if min(self.l1, self.l2, self.l3, self.h1, self.h2, self.h3) < 0:
            raise ValueError("band parameters must be nonnegative")
        if self.h is not None and self.h < 0:
            raise ValueError("height must be nonnegative")

    @property
    def l(self) -> tuple[int, int, int]:
        return (self.l1, self.l2, self.l3)

    @property
    def hs(self) -> tuple[int, int, int]:
        return (self.h1, self.h2, self.h3)


@dataclass(frozen=True)
class Classification:
    label: ClassLabel
    params: ClassParams
    isometry: Isometry
    phase_swapped: bool

    def __iter__(self):
        return iter((self.label, self.params, self.isometry, self.phase_swapped))


def type_words(config: Configuration) -> tuple[str, str]:
    """``(columns left to right, rows top to bottom)`` as strings over a/b/x."""
    cols: dict[int, set] = {}
    rows: dict[int, set] = {}
    for (x, y), ph in config.points.items():
        cols.setdefault(x, set()).add(ph)
        rows.setdefault(y, set()).add(ph)

    def letter(s):
        if len(s) == 2:
            return "x"
        return "a" if Phase.A in s else "b"

    return (
        "".join(letter(cols[k]) for k in sorted(cols)),
        "".join(letter(rows[k]) for k in sorted(rows, reverse=True)),
    )


def _bands(word: str, pattern: str) -> Optional[tuple[int, int, int]]:
    m = re.fullmatch(pattern, word)
    if m is None:
        return None
    return tuple(len(g) for g in m.groups())  # type: ignore[return-value]


def _match_class(label: ClassLabel, cols: str, rows: str):
    if label is ClassLabel.I:
        lc = _bands(cols, r"(a*)(x*)(b*)")
        if lc and set(rows) == {"x"}:
            return label, ClassParams(*lc, 0, len(rows), 0, h=len(rows))
    elif label is ClassLabel.II:
        lc = _bands(cols, r"(a+)()(b+)")
        if lc and set(rows) != {"x"}:
            # rows split into the bands above, inside and below the two-typed stretch
            hr = _bands(rows, r"([ab]*?)(x+)([ab]*)")
            if hr:
                return label, ClassParams(*lc, *hr)
    elif label is ClassLabel.III:
        if set(cols) <= {"a", "x"} and set(rows) <= {"a", "x"}:
            lc = _bands(cols, r"(a*?)(x*)(a*)")
            hr = _bands(rows, r"(a*?)(x*)(a*)")
            if lc and hr:
                return label, ClassParams(*lc, *hr)
    elif label is ClassLabel.IV:
        lc = _bands(cols, r"(a+)(x+)(b*)")
        hr = _bands(rows, r"(a+)(x+)(b*)")
        if lc and hr and (lc[2] > 0 or hr[2] > 0):
            return label, ClassParams(*lc, *hr)
    elif label is ClassLabel.V:
        lc = _bands(cols, r"(a+)(x+)(a+)")
        hr = _bands(rows, r"(a+)(x+)(b+)")
        if lc and hr:
            return label, ClassParams(*lc, *hr)
    return None


_ORDER = (ClassLabel.I, ClassLabel.II, ClassLabel.III, ClassLabel.IV, ClassLabel.V)


def _normalising(config: Configuration, g: int) -> Isometry:
    a, b, c, d = POINT_GROUP[g]
    xs = [a * x + b * y for x, y in config.points]
    ys = [c * x + d * y for x, y in config.points]
    return Isometry(g, -min(xs), -min(ys))


def classify(config: Configuration, check: bool = True) -> Classification:
    """First matching class over the orientations, phase swap tried last.

    The returned isometry (followed by the phase swap, if flagged) maps the
    input onto the normal orientation, translated to a bounding-box minimum
    of ``(0, 0)``.
    """
    if check:
        rep = is_admissible(config)
        if not rep:
            raise NotAdmissible(rep.violations)
    if len(config) == 0:
        raise NotAdmissible(["empty"])
    for label in _ORDER:
        for swapped in (False, True):
            base = config.swapped() if swapped else config
            for g in range(8):
                iso = _normalising(base, g)
                cols, rows = type_words(apply_isometry(base, iso))
                hit = _match_class(label, cols, rows)
                if hit is not None:
                    return Classification(hit[0], hit[1], iso, swapped)
    raise NotAdmissible(["no class matches"])


def class_energy(label: ClassLabel, params: ClassParams, n_a: int, n_b: int) -> AffineInBeta:
    """``-2N + N_col + N_row + (1 - beta) * (two-typed columns + two-typed rows)``."""
    label = ClassLabel(label)
    if label is ClassLabel.NotAdmissible:
        raise ValueError("no energy formula for a non-admissible configuration")
    n = n_a + n_b
    ncol = params.l1 + params.l2 + params.l3
    if label is ClassLabel.I:
        h = params.h if params.h is not None else params.h2
        nrow, cross = h, params.l2 + h
    else:
        nrow, cross = params.h1 + params.h2 + params.h3, params.l2 + params.h2
    return AffineInBeta(-2 * n + ncol + nrow + cross, -cross)


def _straight(n_a: int, n_b: int, h: int):
    la, ra = divmod(n_a, h)
    lb, rb = divmod(n_b, h)
    if la == 0 or lb == 0:
        return None
    cols = []
    if ra:
        cols.append([None] * (h - ra) + [Phase.A] * ra)
    cols += [[Phase.A] * h] * la + [[Phase.B] * h] * lb
    if rb:
        cols.append([None] * (h - rb) + [Phase.B] * rb)
    return _build(cols)


def _mixed(n_a: int, n_b: int, h: int, a: int):
    rest_a, rest_b = n_a - a, n_b - (h - a)
    if rest_a < 0 or rest_b < 0:
        return None
    la, ra = divmod(rest_a, h)
    lb, rb = divmod(rest_b, h)
    cols = []
    if ra:  # A sits on top of the mixed column, so its partial column hangs from the top
        cols.append([Phase.A] * ra + [None] * (h - ra))
    cols += [[Phase.A] * h] * la
    cols.append([Phase.A] * a + [Phase.B] * (h - a))
    cols += [[Phase.B] * h] * lb
    if rb:
        cols.append([None] * (h - rb) + [Phase.B] * rb)
    return _build(cols)


def _build(cols) -> Configuration:
    h = len(cols[0])
    pts = []
    for x, col in enumerate(cols):
        for i, ph in enumerate(col):
            if ph is not None:
                pts.append(((x, h - i), ph))
    return Configuration(pts)


def _all_rows_mixed(config: Configuration) -> bool:
    return set(type_words(config)[1]) == {"x"}


def class1_candidates(n_a: int, n_b: int, h: int) -> list[Configuration]:
    """Compact Class I layouts of height ``h``: straight first, then one mixed column."""
    out = []
    heights = [h, h + 1] if n_a == n_b else [h]
    for hh in heights:
        builds = [_straight(n_a, n_b, hh)] + [_mixed(n_a, n_b, hh, a) for a in range(1, hh)]
        out += [c for c in builds if c is not None and _all_rows_mixed(c)]
    return out


def compactify_class1(config: Configuration, beta: Optional[BetaLike] = None) -> Configuration:
    """Replace a Class I configuration by the best compact layout of its height.

    Candidates have ``l2 <= 1``; ties keep the earliest candidate, so height
    ``h`` wins over ``h + 1`` and the straight interface over a mixed column.
    Without ``beta`` a candidate must be no worse for every beta in (0, 1).
    """
    cls = classify(config)
    if cls.label is not ClassLabel.I:
        raise ValueError(f"compactify_class1 needs a Class I configuration, got {cls.label.value}")
    p_in = perimeter(config)
    best, best_p = None, None
    for cand in class1_candidates(config.n_a, config.n_b, cls.params.h):
        p = perimeter(cand)
        if beta is not None:
            if best is None or p.compare(best_p, beta) < 0:
                best, best_p = cand, p
        elif _not_worse(p, p_in) and (best is None or _strictly_better(p, best_p)):
            best, best_p = cand, p
    if best is None:
        raise AssertionError("no compact layout matches the input perimeter")
    if beta is not None and best_p.compare(p_in, beta) > 0:
        raise AssertionError("compact layout has larger perimeter than the input")
    return best


def _not_worse(p: AffineInBeta, q: AffineInBeta) -> bool:
    # p <= q for every beta in (0, 1): check both endpoints of the affine segment
    return p.c0 <= q.c0 and p.c0 + p.c1 <= q.c0 + q.c1


def _strictly_better(p: AffineInBeta, q: AffineInBeta) -> bool:
    return _not_worse(p, q) and p != q
