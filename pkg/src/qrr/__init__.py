"""Exact q-series engine for Rogers-Ramanujan type identities."""

from qrr.coeffring import OMEGA, EisensteinRational, omega_pow
from qrr.series import QSeries

__version__ = "0.1.0"

__all__ = ["EisensteinRational", "OMEGA", "QSeries", "omega_pow", "__version__"]
