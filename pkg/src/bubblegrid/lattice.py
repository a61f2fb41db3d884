"""Two-phase configurations on Z^2 and their exact energy algebra.

Every energy or perimeter of a configuration is an integer-affine function of
the interaction parameter beta, so values are kept as ``AffineInBeta`` pairs
``c0 + c1*beta`` and only evaluated at a concrete ``Beta`` when compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

Point = tuple[int, int]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# comparisons in float mode closer than this are reported as ties
FLOAT_TIE_TOL = 1e-9

NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def check_coordinate(v: int) -> int:
    if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
        raise TypeError(f"lattice coordinate must be an integer, got {v!r}")
    v = int(v)
    if v < INT64_MIN or v > INT64_MAX:
        raise OverflowError(f"lattice coordinate {v} does not fit in int64")
    return v


class Phase(str, Enum):
    A = "A"
    B = "B"

    def other(self) -> "Phase":
        return Phase.B if self is Phase.A else Phase.A


@dataclass(frozen=True)
class Beta:
    """Interaction strength between the two phases, 0 < beta < 1.

    Exact mode stores a reduced ``Fraction``; float mode stores a float and
    is used for irrational values.
    """

    value: Union[Fraction, float]
    exact: bool = True

    def __post_init__(self):
        if self.exact:
            v = Fraction(self.value)
            object.__setattr__(self, "value", v)
        else:
            v = float(self.value)
            if not math.isfinite(v):
                raise ValueError("beta must be finite")
            object.__setattr__(self, "value", v)
        if not 0 < v < 1:
            raise ValueError(f"beta must lie in (0, 1), got {v}")

    @classmethod
    def rational(cls, p: int, q: int = 1) -> "Beta":
        return cls(Fraction(p, q), exact=True)

    @classmethod
    def approx(cls, x: float) -> "Beta":
        return cls(float(x), exact=False)

    @classmethod
    def parse(cls, text: str) -> "Beta":
        """Parse ``p/q`` (exact) or ``~x`` (float mode)."""
        s = text.strip()
        if s.startswith("~"):
            try:
                return cls.approx(float(s[1:]))
            except ValueError as exc:
                raise ValueError(f"malformed beta {text!r}: {exc}") from None
        try:
            frac = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed beta {text!r}") from None
        return cls(frac, exact=True)

    @property
    def numerator(self) -> int:
        if not self.exact:
            raise ValueError("float-mode beta has no numerator")
        return self.value.numerator

    @property
    def denominator(self) -> int:
        if not self.exact:
            raise ValueError("float-mode beta has no denominator")
        return self.value.denominator

    @property
    def float_value(self) -> float:
        return float(self.value)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        if self.exact:
            return f"{self.value.numerator}/{self.value.denominator}"
        return f"~{self.value!r}"


BetaLike = Union[Beta, Fraction, float, int, str]


def as_beta(beta: BetaLike) -> Beta:
    if isinstance(beta, Beta):
        return beta
    if isinstance(beta, str):
        return Beta.parse(beta)
    if isinstance(beta, float):
        return Beta.approx(beta)
    return Beta(Fraction(beta))


@dataclass(frozen=True)
class AffineInBeta:
    """Exact value ``c0 + c1 * beta`` with integer coefficients."""

    c0: int
    c1: int = 0

    def __add__(self, other):
        if isinstance(other, int):
            return AffineInBeta(self.c0 + other, self.c1)
        if not isinstance(other, AffineInBeta):
            return NotImplemented
        return AffineInBeta(self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __neg__(self):
        return AffineInBeta(-self.c0, -self.c1)

    def __sub__(self, other):
        if isinstance(other, int):
            return AffineInBeta(self.c0 - other, self.c1)
        if not isinstance(other, AffineInBeta):
            return NotImplemented
        return AffineInBeta(self.c0 - other.c0, self.c1 - other.c1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return AffineInBeta(self.c0 * k, self.c1 * k)

    __rmul__ = __mul__

    def at(self, beta: BetaLike) -> Union[Fraction, float]:
        b = as_beta(beta)
        if b.exact:
            return self.c0 + self.c1 * b.value
        return self.c0 + self.c1 * float(b.value)

    def compare(self, other: "AffineInBeta", beta: BetaLike) -> int:
        """Return -1, 0 or 1; exact in integer arithmetic for rational beta."""
        b = as_beta(beta)
        d0, d1 = self.c0 - other.c0, self.c1 - other.c1
        if b.exact:
            p, q = b.value.numerator, b.value.denominator
            key = q * d0 + p * d1
        else:
            key = d0 + d1 * b.value
            if abs(key) <= FLOAT_TIE_TOL:
                return 0
        return (key > 0) - (key < 0)

    def __str__(self) -> str:
        if self.c1 == 0:
            return str(self.c0)
        return f"{self.c0}{self.c1:+d}b"


@dataclass(frozen=True)
class BondCounts:
    intra_A: int = 0
    intra_B: int = 0
    cross: int = 0
    boundary_A: int = 0
    boundary_B: int = 0


class Configuration:
    """Finite, immutable assignment of lattice points to phases A and B.

    Equality is set equality of ``(point, phase)`` pairs; no translation
    normalisation is applied.
    """

    __slots__ = ("_points", "_A", "_B", "_hash")

    def __init__(self, points: Union[Mapping[Point, Phase], Iterable[tuple[Point, Phase]]] = ()):
        items = points.items() if isinstance(points, Mapping) else points
        table: dict[Point, Phase] = {}
        for (x, y), phase in items:
            p = (check_coordinate(x), check_coordinate(y))
            phase = Phase(phase)
            if p in table and table[p] is not phase:
                raise ValueError(f"point {p} assigned to both phases")
            table[p] = phase
        self._points = table
        self._A = frozenset(p for p, ph in table.items() if ph is Phase.A)
        self._B = frozenset(p for p, ph in table.items() if ph is Phase.B)
        self._hash = None

    @classmethod
    def from_sets(cls, A: Iterable[Point], B: Iterable[Point]) -> "Configuration":
        A = [tuple(p) for p in A]
        B = [tuple(p) for p in B]
        overlap = set(A) & set(B)
        if overlap:
            raise ValueError(f"A and B must be disjoint; shared points {sorted(overlap)[:5]}")
        return cls([(p, Phase.A) for p in A] + [(p, Phase.B) for p in B])

    @property
    def A(self) -> frozenset:
        return self._A

    @property
    def B(self) -> frozenset:
        return self._B

    @property
    def n_a(self) -> int:
        return len(self._A)

    @property
    def n_b(self) -> int:
        return len(self._B)

    @property
    def points(self) -> Mapping[Point, Phase]:
        return dict(self._points)

    def phase_at(self, p: Point):
        return self._points.get(p)

    def union(self) -> frozenset:
        return self._A | self._B

    def swapped(self) -> "Configuration":
        return Configuration.from_sets(self._B, self._A)

    def translated(self, dx: int, dy: int) -> "Configuration":
        return Configuration((((x + dx, y + dy), ph) for (x, y), ph in self._points.items()))

    def bbox(self) -> tuple[int, int, int, int]:
        """``(xmin, xmax, ymin, ymax)``; raises on the empty configuration."""
        if not self._points:
            raise ValueError("empty configuration has no bounding box")
        xs = [p[0] for p in self._points]
        ys = [p[1] for p in self._points]
        return min(xs), max(xs), min(ys), max(ys)

    def items(self) -> Iterator[tuple[Point, Phase]]:
        return iter(sorted(self._points.items()))

    def __len__(self) -> int:
        return len(self._points)

    def __contains__(self, p) -> bool:
        return p in self._points

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self._A == other._A and self._B == other._B

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._A, self._B))
        return self._hash

    def __repr__(self) -> str:
        return f"Configuration(A={sorted(self._A)}, B={sorted(self._B)})"


def bond_counts(config: Configuration) -> BondCounts:
    intra = {Phase.A: 0, Phase.B: 0}
    cross = 0
    table = config._points
    for (x, y), ph in table.items():
        for q in ((x + 1, y), (x, y + 1)):
            other = table.get(q)
            if other is None:
                continue
            if other is ph:
                intra[ph] += 1
            else:
                cross += 1
    ia, ib = intra[Phase.A], intra[Phase.B]
    return BondCounts(
        intra_A=ia,
        intra_B=ib,
        cross=cross,
        boundary_A=4 * config.n_a - 2 * ia - cross,
        boundary_B=4 * config.n_b - 2 * ib - cross,
    )


def perimeter(config: Configuration) -> AffineInBeta:
    """Lattice perimeter P(A, B) with interfaces weighted by ``2 - 2*beta``."""
    bc = bond_counts(config)
    # Q(A, A^c) + Q(B, B^c) - 2 beta Q(A, B)
    first = AffineInBeta(bc.boundary_A + bc.cross + bc.boundary_B + bc.cross, -2 * bc.cross)
    # Q(A, A^c \ B) + Q(B, B^c \ A) + (2 - 2 beta) Q(A, B)
    second = AffineInBeta(bc.boundary_A + bc.boundary_B, 0) + AffineInBeta(2 * bc.cross, -2 * bc.cross)
    assert first == second
    return second


def energy(config: Configuration) -> AffineInBeta:
    """Sticky-potential energy: -1 per same-phase bond, -beta per cross bond."""
    bc = bond_counts(config)
    return AffineInBeta(-(bc.intra_A + bc.intra_B), -bc.cross)


def ising_energy(config: Configuration, beta: BetaLike = None) -> AffineInBeta:
    """Ferromagnetic Ising form F(C, u) with spin +1 on A and -1 on B.

    Both sums run over ordered neighbour pairs. ``beta`` is accepted for
    interface symmetry only; the result is symbolic in beta.
    """
    if beta is not None:
        as_beta(beta)
    pts = list(config._points)
    if not pts:
        return AffineInBeta(0, 0)
    index = {p: i for i, p in enumerate(pts)}
    spins = np.array([1 if config._points[p] is Phase.A else -1 for p in pts], dtype=np.int64)
    src, dst = [], []
    for p, i in index.items():
        for dx, dy in NEIGHBOURS:
            j = index.get((p[0] + dx, p[1] + dy))
            if j is not None:
                src.append(i)
                dst.append(j)
    if not src:
        return AffineInBeta(0, 0)
    prod = spins[src] * spins[dst]
    s_spin = int(prod.sum())
    s_abs = int(np.abs(prod).sum())
    # F = -(1 - b)/4 * s_spin - (1 + b)/4 * s_abs
    num0, num1 = -(s_spin + s_abs), s_spin - s_abs
    if num0 % 4 or num1 % 4:
        raise ArithmeticError("ordered-pair sums must be divisible by 4")
    return AffineInBeta(num0 // 4, num1 // 4)


def row_slice(config: Configuration, y: int) -> list[tuple[int, Phase]]:
    return sorted((p[0], ph) for p, ph in config._points.items() if p[1] == y)


def col_slice(config: Configuration, x: int) -> list[tuple[int, Phase]]:
    return sorted((p[1], ph) for p, ph in config._points.items() if p[0] == x)


def occupied_rows(config: Configuration) -> list[int]:
    """Occupied y values from top to bottom (row 1 is the maximal y)."""
    return sorted({p[1] for p in config._points}, reverse=True)


def occupied_cols(config: Configuration) -> list[int]:
    """Occupied x values from left to right."""
    return sorted({p[0] for p in config._points})
