"""Exact enumeration of combinatorial classes of polynomial vector fields."""

from ._core import (
    PairingConfig,
    PairKind,
    brute_count,
    burnside_count,
    c_total,
    c_total_closed,
    catalan,
    coeffs_algebraic,
    dimension_distribution,
    enumerate,
    exact_constants,
    normality_distance,
    p_rec,
    parse,
    polya_coefficient,
    ratio,
    render,
    render_dot,
    render_svg,
    run_cli,
    stats,
    type_distribution,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "PairingConfig",
    "PairKind",
    "brute_count",
    "burnside_count",
    "c_total",
    "c_total_closed",
    "catalan",
    "coeffs_algebraic",
    "dimension_distribution",
    "enumerate",
    "exact_constants",
    "normality_distance",
    "p_rec",
    "parse",
    "polya_coefficient",
    "ratio",
    "render",
    "render_dot",
    "render_svg",
    "run_cli",
    "stats",
    "type_distribution",
    "verify",
]
