"""Exact solver, verifier and toolkit for the double-bubble problem on Z^2."""

from .classify import (
    ClassLabel,
    ClassParams,
    Classification,
    NotAdmissible,
    class_energy,
    classify,
    compactify_class1,
)
from .geometry import (
    InterfacePoint,
    Isometry,
    apply_isometry,
    canonical_form,
    interface,
    interface_is_monotone_connected,
    is_connected,
    min_symmetric_difference,
)
from .lattice import (
    AffineInBeta,
    Beta,
    BondCounts,
    Configuration,
    Phase,
    bond_counts,
    col_slice,
    energy,
    ising_energy,
    perimeter,
    row_slice,
)
from .oracle import BudgetExceeded, MinimiserReport, enumerate_minimisers, min_energy_only, verify_formula
from .regularize import (
    RowProfile,
    inter_row_energy,
    inter_row_energy_bound,
    is_admissible,
    regularize_columns,
    regularize_rows,
    remove_empty_lines,
    row_energy,
    row_energy_bound,
)
from .render import render
from .solver import (
    SolveResult,
    build_class4_family,
    build_explicit,
    continuum_energy,
    min_perimeter,
    wulff_discrepancy,
    wulff_rectangles,
)
from .textio import ConfigFormatError, format_configuration, parse_configuration

__version__ = "0.1.0"
