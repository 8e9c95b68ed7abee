"""Exact enumeration of cubic tau-functions, truncated spines and
topological conjugacy classes per generic level."""

from fractions import Fraction

from . import _core
from ._core import (
    IntegrityError,
    LevelSummary,
    admissible_extensions,
    brute_force_enumerate,
    check_admissible,
    enumerate,
    export_prefix_tree,
    grid_to_tau,
    is_admissible,
    marked_levels,
    markers,
    ord,
    ratios,
    reference_table,
    spines,
    symmetry,
    tail_decomposition,
    tau_to_grid,
    top,
    twist_period,
    validate_grid,
)

__version__ = "0.1.0"


def moduli_sum(tau, level):
    """Exact sum of 2**-ord(i) for i = 1..level, as a Fraction."""
    return Fraction(*_core.moduli_sum(tau, level))


def twist_factor(tau):
    """2**L / T(tau) as a Fraction."""
    return Fraction(*_core.twist_factor(tau))


def parse_tau(text):
    """'0,1,0,1,0' -> [0, 1, 0, 1, 0]."""
    return [int(tok) for tok in text.split(",")]
