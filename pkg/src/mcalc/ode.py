r"""First order linear equations in the local M-derivative.

The equation :math:`D_M^{\alpha,\beta} u + P u = Q` becomes, after the
closed form of the derivative, the classical linear equation

.. math::

    u' + \Gamma(\beta + 1) t^{\alpha - 1} P u = \Gamma(\beta + 1) t^{\alpha - 1} Q,

solved exactly by the integrating factor :math:`\mu = \exp(I_a P)`:

.. math::

    u(t) = \frac{1}{\mu(t)} \left( I_a(Q \mu)(t) + u_0 \right),

where :math:`I_a` is the M-integral from the anchor :math:`a`, so that
:math:`u(a) = u_0`.

For the eigen-equation :math:`D_M^{\alpha,\beta} u = \lambda u` (that is
:math:`P = -\lambda`, :math:`Q = 0`) anchored at :math:`t = 0` this gives

.. math::

    u(t) = u_0 \exp\left(\frac{\lambda \Gamma(\beta + 1)}{\alpha} t^\alpha\right).

The exponent carries :math:`+\lambda`; a :math:`-\lambda` exponent solves
:math:`D u = -\lambda u` instead, which :func:`residual` readily confirms.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from mcalc.errors import DomainError, SolutionRangeError
from mcalc.functions import constant
from mcalc.integration import DEFAULT_QUAD, QuadConfig, m_integral
from mcalc.operators import FracOrder, ScalarFn, m_derivative_closed

__all__ = [
    "FIGURE_ALPHAS",
    "FIGURE_PARAMETERS",
    "Curve",
    "LinearProblem",
    "eigen_problem",
    "eigen_solution",
    "figure_curves",
    "linear_solution",
    "residual",
    "solve_eigen",
    "solve_linear",
]


@dataclass(frozen=True)
class LinearProblem:
    """``D u + P u = Q`` on ``[a, oo)`` with ``u(a) = u0``."""

    P: ScalarFn
    Q: ScalarFn
    a: float
    u0: float
    ord: FracOrder

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise DomainError(f"left endpoint must be positive: got {self.a}")
        if not math.isfinite(self.u0):
            raise DomainError(f"initial value must be finite: got {self.u0}")


@dataclass(frozen=True)
class Curve:
    """A sampled trajectory ``u(t)`` on a strictly increasing grid."""

    ts: np.ndarray
    us: np.ndarray
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ts = np.asarray(self.ts, dtype=float)
        us = np.asarray(self.us, dtype=float)
        if ts.ndim != 1 or ts.shape != us.shape:
            raise DomainError(f"ts and us must be 1d of equal length: {ts.shape} {us.shape}")
        if not (np.all(np.isfinite(ts)) and np.all(np.isfinite(us))):
            raise DomainError("curve entries must be finite")
        if ts.size > 1 and not np.all(np.diff(ts) > 0):
            raise DomainError("curve abscissae must be strictly increasing")

        object.__setattr__(self, "ts", ts)
        object.__setattr__(self, "us", us)

    def __len__(self) -> int:
        return self.ts.size


def _grid(ts: Sequence[float], lower: float) -> np.ndarray:
    grid = np.asarray(ts, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("grid must be a non-empty 1d sequence")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise DomainError("grid must be strictly increasing")
    if grid[0] < lower:
        raise DomainError(f"grid starts at {grid[0]}, below the anchor {lower}")
    return grid


# {{{ general linear equation


def _checked_exp(x: float, t: float) -> float:
    try:
        value = math.exp(x)
    except OverflowError:
        value = math.inf
    if value == 0.0 or not math.isfinite(value):
        raise SolutionRangeError(
            f"integrating factor exp({x:.6g}) leaves the double range at t={t:g}",
            t=t,
        )
    return value


def linear_solution(
    problem: LinearProblem, cfg: QuadConfig = DEFAULT_QUAD
) -> ScalarFn:
    """The integrating-factor solution as an evaluable function.

    Each evaluation runs nested quadratures, so the result carries no
    analytic derivative. Points in ``(0, a)`` are accepted and integrate
    backwards from the anchor.
    """
    P, Q, a, ord = problem.P, problem.Q, problem.a, problem.ord

    def integral(f: Callable[[float], float], t: float) -> float:
        # oriented integral, so the formula also holds on (0, a)
        if t >= a:
            return m_integral(f, ord, a, t, cfg)
        return -m_integral(f, ord, t, a, cfg)

    def mu(x: float) -> float:
        return _checked_exp(integral(P, x), x)

    def u(t: float) -> float:
        if not t > 0.0:
            raise DomainError(f"solution is defined for t > 0: got t={t}")
        forced = integral(lambda x: Q(x) * mu(x), t)
        return (forced + problem.u0) / mu(t)

    return ScalarFn(u, None, f"u[P={P.label}, Q={Q.label}]")


def solve_linear(
    problem: LinearProblem,
    ts: Sequence[float],
    cfg: QuadConfig = DEFAULT_QUAD,
) -> Curve:
    """Sample the solution of ``D u + P u = Q``, ``u(a) = u0`` on *ts*.

    :raises SolutionRangeError: if the integrating factor over- or
        underflows.
    """
    grid = _grid(ts, problem.a)
    u = linear_solution(problem, cfg)

    return Curve(
        grid,
        np.array([u(float(t)) for t in grid]),
        {
            "alpha": problem.ord.alpha,
            "beta": problem.ord.beta,
            "P": problem.P.label,
            "Q": problem.Q.label,
            "a": problem.a,
            "u0": problem.u0,
        },
    )


# }}}


# {{{ eigen-equation


def eigen_solution(lam: float, u0: float, ord: FracOrder) -> ScalarFn:
    r""":math:`u_0 \exp(\lambda \Gamma(\beta+1) t^\alpha / \alpha)` with its
    classical derivative."""
    rate = lam * ord.gamma_factor / ord.alpha
    alpha = ord.alpha

    def u(t: float) -> float:
        return u0 * _checked_exp(rate * t**alpha, t)

    def du(t: float) -> float:
        return u(t) * lam * ord.gamma_factor * t ** (alpha - 1.0)

    return ScalarFn(u, du, f"eigen[lambda={lam:g}, u0={u0:g}]")


def eigen_problem(lam: float, ord: FracOrder, a: float, u0: float) -> LinearProblem:
    """``D u = lam u`` as a :class:`LinearProblem` anchored at *a*."""
    return LinearProblem(constant(-lam), constant(0.0), a, u0, ord)


def solve_eigen(
    lam: float, u0: float, ord: FracOrder, ts: Sequence[float]
) -> Curve:
    """Sample the solution of ``D u = lam u``, ``u(0) = u0`` on *ts*.

    The grid may start at ``t = 0``, where the solution equals *u0*.
    """
    grid = _grid(ts, 0.0)
    u = eigen_solution(lam, u0, ord)

    return Curve(
        grid,
        np.array([u(float(t)) for t in grid]),
        {"alpha": ord.alpha, "beta": ord.beta, "lambda": lam, "u0": u0},
    )


# }}}


# {{{ residual


def residual(
    curve_fn: Callable[[float], float] | ScalarFn,
    problem: LinearProblem,
    ts: Sequence[float],
) -> float:
    """Largest ``|D u(t) + P(t) u(t) - Q(t)|`` over *ts*.

    The derivative uses the closed form; the classical derivative of
    *curve_fn* is taken from it when supplied and by finite differences
    otherwise.
    """
    if not isinstance(curve_fn, ScalarFn):
        curve_fn = ScalarFn(curve_fn)
    if not curve_fn.has_derivative:
        curve_fn = ScalarFn(curve_fn.eval, curve_fn.derivative, curve_fn.label)

    worst = 0.0
    for t in ts:
        t = float(t)
        du = m_derivative_closed(curve_fn, problem.ord, t)
        worst = max(worst, abs(du + problem.P(t) * curve_fn(t) - problem.Q(t)))

    return worst


# }}}


# {{{ figures

#: (beta, lambda, u0) of the three reference solution plots.
FIGURE_PARAMETERS: dict[int, tuple[float, float, float]] = {
    1: (0.5, 1.0, 20.0),
    2: (1.0, 2.0, 20.0),
    3: (1.5, 2.5, 20.0),
}

#: The plots do not state alpha, so a family is drawn instead.
FIGURE_ALPHAS: tuple[float, ...] = (0.3, 0.5, 0.7, 0.9, 1.0)


def figure_curves(
    which: int, t_max: float = 5.0, n: int = 501
) -> list[Curve]:
    """Eigen-equation solutions for one plot, one curve per alpha."""
    if which not in FIGURE_PARAMETERS:
        raise DomainError(f"figure must be one of {sorted(FIGURE_PARAMETERS)}: got {which}")

    beta, lam, u0 = FIGURE_PARAMETERS[which]
    ts = np.linspace(0.0, t_max, n)
    return [solve_eigen(lam, u0, FracOrder(alpha, beta), ts) for alpha in FIGURE_ALPHAS]


# }}}
