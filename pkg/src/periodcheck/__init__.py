"""Exact series, p-adic congruences and tempered polylogarithms attached to circle actions."""

from .checks import run_suite
from .punctured import PRF, PuncturedRationalFunction, parse_expr
from .report import CheckReport, SuiteReport
from .series import ModPSeries, TruncatedSeries

__all__ = [
    "CheckReport",
    "ModPSeries",
    "PRF",
    "PuncturedRationalFunction",
    "SuiteReport",
    "TruncatedSeries",
    "parse_expr",
    "run_suite",
]
