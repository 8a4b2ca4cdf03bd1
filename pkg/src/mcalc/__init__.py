"""mcalc: numerical calculus of the local M-derivative.

The local M-derivative replaces the shift ``t + eps`` of the classical
difference quotient by the dilation ``t * E_beta(eps * t**-alpha)``, with
``E_beta`` the one-parameter Mittag-Leffler function. This package
evaluates it (by its limit definition and by its closed form), its inverse
the M-integral, the associated identities and mean value theorems, and the
first order linear equations it defines.

Example
-------
>>> from mcalc import FracOrder, m_derivative_limit
>>> from mcalc.functions import power
>>> round(m_derivative_limit(power(2.0), FracOrder(0.5, 1.0), 4.0), 8)
16.0
"""

from __future__ import annotations

from mcalc.errors import (
    AccuracyError,
    ContractError,
    ConvergenceError,
    DegenerateDenominatorError,
    DomainError,
    EvaluationError,
    McalcError,
    SearchFailure,
    SolutionRangeError,
)
from mcalc.integration import (
    QuadConfig,
    ftc_roundtrip,
    integral_bound_check,
    integration_by_parts_check,
    inverse_roundtrip,
    m_integral,
)
from mcalc.ode import Curve, LinearProblem, residual, solve_eigen, solve_linear
from mcalc.operators import (
    FracOrder,
    LimitConfig,
    ScalarFn,
    alternative_derivative,
    conformable_derivative,
    m_derivative_closed,
    m_derivative_higher,
    m_derivative_limit,
)
from mcalc.special_fn import SeriesConfig, gamma, mittag_leffler
from mcalc.theorems import Witness, extended_mvt_witness, mvt_witness, rolle_witness

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "ContractError",
    "ConvergenceError",
    "Curve",
    "DegenerateDenominatorError",
    "DomainError",
    "EvaluationError",
    "FracOrder",
    "LimitConfig",
    "LinearProblem",
    "McalcError",
    "QuadConfig",
    "ScalarFn",
    "SearchFailure",
    "SeriesConfig",
    "SolutionRangeError",
    "Witness",
    "alternative_derivative",
    "conformable_derivative",
    "extended_mvt_witness",
    "ftc_roundtrip",
    "gamma",
    "integral_bound_check",
    "integration_by_parts_check",
    "inverse_roundtrip",
    "m_derivative_closed",
    "m_derivative_higher",
    "m_derivative_limit",
    "m_integral",
    "mittag_leffler",
    "mvt_witness",
    "residual",
    "rolle_witness",
    "solve_eigen",
    "solve_linear",
]
