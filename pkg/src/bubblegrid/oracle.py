"""Exhaustive ground-truth search over small configurations.

Every fixed polyomino with ``N_A + N_B`` cells is generated (Redelmeier's
algorithm), and every way of colouring ``N_A`` of its cells with A is
scored at once with a matrix product. Restricting to connected unions loses
nothing: if the union has two components, translating one until it touches
the other adds at least one bond worth at most ``-beta < 0`` and removes
none, so no minimiser has a disconnected union.
"""

from __future__ import annotations

import itertools
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Union

import numpy as np

from .geometry import canonical_form, canonical_key
from .lattice import FLOAT_TIE_TOL, AffineInBeta, Beta, BetaLike, Configuration, Phase, as_beta, energy
from .solver import HALF, min_perimeter

DEFAULT_BUDGET = 11
WARN_ABOVE = 12
SOUNDNESS_NOTE = (
    "search restricted to connected unions: translating one component of a "
    "disconnected union into contact adds a bond of energy <= -beta < 0, so "
    "every minimiser has a connected union"
)


class BudgetExceeded(ValueError):
    pass


# -- polyomino generation ------------------------------------------------------


def _allowed(c) -> bool:
    # cells reachable from the origin with the origin as the lowest-then-leftmost cell
    return c[1] > 0 or (c[1] == 0 and c[0] >= 0)


def _neighbours(c):
    x, y = c
    return ((x + 1, y), (x, y + 1), (x - 1, y), (x, y - 1))


@dataclass
class _State:
    cells: list
    untried: list
    marked: set


def _grow(state: _State, n: int) -> Iterator[tuple]:
    """Redelmeier recursion: yields each fixed polyomino extending ``state`` once."""
    cells, marked = state.cells, state.marked
    untried = list(state.untried)
    while untried:
        c = untried.pop()
        cells.append(c)
        if len(cells) == n:
            yield tuple(cells)
        else:
            new = [q for q in _neighbours(c) if _allowed(q) and q not in marked]
            marked.update(new)
            yield from _grow(_State(cells, untried + new, marked), n)
            marked.difference_update(new)
        cells.pop()


def _root() -> _State:
    return _State([], [(0, 0)], {(0, 0)})


def fixed_polyominoes(n: int) -> Iterator[tuple]:
    """All fixed polyominoes with ``n`` cells, as tuples of cells."""
    if n < 1:
        raise ValueError("polyomino size must be positive")
    yield from _grow(_root(), n)


def _split(n: int, depth: int) -> list[_State]:
    """Frontier states after placing ``depth`` cells; their subtrees partition the search."""
    out: list[_State] = []

    def walk(state: _State):
        cells, marked = state.cells, state.marked
        untried = list(state.untried)
        while untried:
            c = untried.pop()
            cells.append(c)
            new = [q for q in _neighbours(c) if _allowed(q) and q not in marked]
            marked.update(new)
            child = _State(cells, untried + new, marked)
            if len(cells) == depth:
                out.append(_State(list(cells), list(child.untried), set(marked)))
            else:
                walk(child)
            marked.difference_update(new)
            cells.pop()

    walk(_root())
    return out


# -- scoring -------------------------------------------------------------------

_PAIR_CACHE: dict = {}


def _pairs(n: int):
    if n not in _PAIR_CACHE:
        _PAIR_CACHE[n] = list(itertools.combinations(range(n), 2))
    return _PAIR_CACHE[n]


def _assignments(n: int, n_a: int) -> np.ndarray:
    """Rows are 0/1 masks (1 = A) over cell indices, in lexicographic combination order."""
    rows = np.zeros((comb(n, n_a), n), dtype=np.int8)
    for i, idx in enumerate(itertools.combinations(range(n), n_a)):
        rows[i, list(idx)] = 1
    return rows


def _adjacency_rows(polys, n: int) -> np.ndarray:
    pairs = _pairs(n)
    out = np.zeros((len(polys), len(pairs)), dtype=np.float32)
    for r, cells in enumerate(polys):
        cells = sorted(cells)
        for k, (i, j) in enumerate(pairs):
            (xi, yi), (xj, yj) = cells[i], cells[j]
            if abs(xi - xj) + abs(yi - yj) == 1:
                out[r, k] = 1.0
    return out


@dataclass
class _Partial:
    best_key: Union[int, float, None] = None
    hits: list = field(default_factory=list)  # (cells, assignment row)
    shapes: int = 0


def _score_block(polys, n, n_a, masks, differ, beta: Beta, keep: bool, acc: _Partial):
    if not polys:
        return
    adj = _adjacency_rows(polys, n)
    edges = adj.sum(1).astype(np.int64)
    cross = np.rint(adj @ differ).astype(np.int64)  # (polys, assignments)
    if beta.exact:
        p, q = beta.numerator, beta.denominator
        # q * energy = q * (-(edges - cross)) - p * cross
        keys = -q * edges[:, None] + (q - p) * cross
        row_min = keys.min(1)
        m = int(row_min.min())
        if acc.best_key is not None and m > acc.best_key:
            return
        if acc.best_key is None or m < acc.best_key:
            acc.best_key, acc.hits = m, []
        if keep:
            for r in np.flatnonzero(row_min == m):
                for a in np.flatnonzero(keys[r] == m):
                    acc.hits.append((tuple(sorted(polys[r])), int(a)))
    else:
        b = float(beta.value)
        keys = -edges[:, None] + (1 - b) * cross
        m = float(keys.min())
        if acc.best_key is not None and m > acc.best_key + FLOAT_TIE_TOL:
            return
        if acc.best_key is None or m < acc.best_key - FLOAT_TIE_TOL:
            acc.best_key = m
            acc.hits = []
        thr = acc.best_key + FLOAT_TIE_TOL
        if keep:
            for r, a in zip(*np.nonzero(keys <= thr)):
                acc.hits.append((tuple(sorted(polys[r])), int(a)))
        acc.best_key = min(acc.best_key, m)


def _search_states(states, n, n_a, beta: Beta, keep: bool, block: int = 4096) -> _Partial:
    masks = _assignments(n, n_a)
    pairs = _pairs(n)
    ii = np.array([i for i, _ in pairs], dtype=np.int64)
    jj = np.array([j for _, j in pairs], dtype=np.int64)
    differ = (masks[:, ii] != masks[:, jj]).T.astype(np.float32)  # (pairs, assignments)
    acc = _Partial()
    buf = []
    for st in states:
        for poly in _grow(st, n) if len(st.cells) < n else [tuple(st.cells)]:
            buf.append(poly)
            acc.shapes += 1
            if len(buf) >= block:
                _score_block(buf, n, n_a, masks, differ, beta, keep, acc)
                buf = []
    _score_block(buf, n, n_a, masks, differ, beta, keep, acc)
    return acc


def _worker(args):
    states, n, n_a, beta, keep = args
    return _search_states(states, n, n_a, beta, keep)


def thread_count() -> int:
    raw = os.environ.get("BUBBLEGRID_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"BUBBLEGRID_THREADS must be an integer, got {raw!r}") from None


def _check_budget(n_a: int, n_b: int, budget: int):
    if n_a < 0 or n_b < 0:
        raise ValueError("phase counts must be nonnegative")
    n = n_a + n_b
    if n == 0:
        raise ValueError("N_A + N_B must be positive")
    if n > budget:
        raise BudgetExceeded(f"{n} points exceed the budget of {budget}")
    if n > WARN_ABOVE:
        warnings.warn(f"exhaustive search over {n} points may take very long", RuntimeWarning, stacklevel=3)


def _run(n_a: int, n_b: int, beta: Beta, keep: bool, workers: int) -> _Partial:
    n = n_a + n_b
    if workers <= 1 or n < 6:
        return _search_states([_root()], n, n_a, beta, keep)
    depth = min(4, n)
    states = _split(n, depth)
    chunks = [states[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_worker, [(c, n, n_a, beta, keep) for c in chunks]))
    # deterministic merge in task order
    out = _Partial()
    for part in parts:
        out.shapes += part.shapes
        if part.best_key is None:
            continue
        if beta.exact:
            if out.best_key is None or part.best_key < out.best_key:
                out.best_key, out.hits = part.best_key, list(part.hits)
            elif part.best_key == out.best_key:
                out.hits += part.hits
        else:
            if out.best_key is None or part.best_key < out.best_key - FLOAT_TIE_TOL:
                out.best_key, out.hits = part.best_key, list(part.hits)
            elif abs(part.best_key - out.best_key) <= FLOAT_TIE_TOL:
                out.hits += part.hits
                out.best_key = min(out.best_key, part.best_key)
    return out


def _to_value(key, beta: Beta):
    return Fraction(key, beta.denominator) if beta.exact else float(key)


@dataclass(frozen=True)
class MinimiserReport:
    n_a: int
    n_b: int
    beta: Beta
    min_energy: Union[Fraction, float]
    minimisers_no_swap: tuple[Configuration, ...]
    minimisers_with_swap: tuple[Configuration, ...]
    shapes_searched: int
    energies: tuple[AffineInBeta, ...]  # distinct symbolic values attaining the minimum
    note: str = SOUNDNESS_NOTE

    @property
    def count_no_swap(self) -> int:
        return len(self.minimisers_no_swap)

    @property
    def count_swap(self) -> int:
        return len(self.minimisers_with_swap)


def _config_of(cells, row: int, masks: np.ndarray) -> Configuration:
    return Configuration(
        ((c, Phase.A if masks[row, i] else Phase.B) for i, c in enumerate(cells))
    )


def _dedupe(configs, swap: bool) -> tuple[Configuration, ...]:
    seen = {}
    for c in configs:
        k = canonical_key(c, swap)
        if k not in seen:
            seen[k] = canonical_form(c, swap)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_minimisers(
    n_a: int, n_b: int, beta: BetaLike, budget: int = DEFAULT_BUDGET, workers: int | None = None
) -> MinimiserReport:
    b = as_beta(beta)
    _check_budget(n_a, n_b, budget)
    part = _run(n_a, n_b, b, True, thread_count() if workers is None else workers)
    masks = _assignments(n_a + n_b, n_a)
    configs = [_config_of(cells, row, masks) for cells, row in part.hits]
    no_swap = _dedupe(configs, False)
    with_swap = _dedupe(no_swap, True)
    energies = tuple(sorted({energy(c) for c in no_swap}, key=lambda e: (e.c0, e.c1)))
    value = _to_value(part.best_key, b)
    if not b.exact:
        value = min(float(e.at(b)) for e in energies)
    return MinimiserReport(n_a, n_b, b, value, no_swap, with_swap, part.shapes, energies)


def min_energy_only(
    n_a: int, n_b: int, beta: BetaLike, budget: int = DEFAULT_BUDGET, workers: int | None = None
) -> Union[Fraction, float]:
    b = as_beta(beta)
    _check_budget(n_a, n_b, budget)
    part = _run(n_a, n_b, b, False, thread_count() if workers is None else workers)
    return _to_value(part.best_key, b)


@dataclass(frozen=True)
class FormulaCheck:
    n: int
    oracle_perimeter: Fraction
    formula_perimeter: Fraction

    @property
    def ok(self) -> bool:
        return self.oracle_perimeter == self.formula_perimeter


def verify_formula(n_max: int, beta: BetaLike, budget: int = 10) -> list[FormulaCheck]:
    """Compare ``2*E_min + 8N`` from the oracle with the closed-form minimum for N = 1..n_max."""
    b = as_beta(beta)
    if not b.exact or b.value > HALF:
        raise ValueError("verify_formula needs an exact beta <= 1/2")
    out = []
    for n in range(1, n_max + 1):
        e = min_energy_only(n, n, b, budget=budget)
        out.append(FormulaCheck(n, 2 * e + 8 * n, min_perimeter(n, b).min_perimeter))
    return out
