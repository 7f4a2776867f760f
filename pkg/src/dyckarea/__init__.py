"""Exact generating functions for area-weighted Dyck paths of bounded height."""

from .genfun import (
    QPolynomial,
    RationalGF,
    cf_gf,
    d_corollary,
    d_infinite,
    d_rational,
    d_theorem,
    phi_expand,
    q_poly_closed,
    q_poly_recurrence,
    w_series,
)
from .pathenum import DyckPath, PathStats, brute_force_gf, dp_gf, generate_paths, path_stats
from .polyring import MPoly, TSeries, ZSeries
from .qcombinat import inv_poch_series, q_binomial, q_pochhammer

__version__ = "0.1.0"

__all__ = [
    "DyckPath", "MPoly", "PathStats", "QPolynomial", "RationalGF", "TSeries", "ZSeries",
    "brute_force_gf", "cf_gf", "d_corollary", "d_infinite", "d_rational", "d_theorem",
    "dp_gf", "generate_paths", "inv_poch_series", "path_stats", "phi_expand",
    "q_binomial", "q_poly_closed", "q_poly_recurrence", "q_pochhammer", "w_series",
]
