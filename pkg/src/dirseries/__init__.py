"""Exact symbolic algebra of truncated power series under Dirichlet
composition: convolution, inverses, parametric powers and logarithms,
matrix families over the divisor lattice, multiplicative partition
polynomials, shifted-power (generalized Lagrange) families, and a
verification suite for the identities connecting them."""

from .poly import BETA, PHI, PSI, Polynomial, binom_poly, log_n_poly, rising_poly
from .series import DirSeries, OrdSeries

__all__ = [
    "BETA",
    "PHI",
    "PSI",
    "Polynomial",
    "binom_poly",
    "log_n_poly",
    "rising_poly",
    "DirSeries",
    "OrdSeries",
]
