r"""Witness points for Rolle's theorem and the mean value theorems.

Each search scans a uniform grid of ``(a, b)`` for a point where the
defect function is within tolerance or changes sign, then bisects. The
theorems only guarantee existence, so the first witness in grid order is
returned; when the defect is within tolerance on the whole grid (the
defect vanishes identically) the midpoint is returned.

The mean value target is

.. math::

    \frac{f(b) - f(a)}{\Gamma(\beta + 1) (b^\alpha - a^\alpha) / \alpha},

which follows from Cauchy's mean value theorem with :math:`g = t^\alpha`
and makes the witness point independent of :math:`\beta`. Without the
:math:`\Gamma(\beta + 1)` factor no witness exists for
:math:`f = t^\alpha / \alpha` unless :math:`\beta = 1`.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from mcalc.errors import ContractError, DegenerateDenominatorError, DomainError, SearchFailure
from mcalc.operators import FracOrder, ScalarFn, m_derivative_closed

__all__ = [
    "SCAN_POINTS",
    "Witness",
    "extended_mvt_witness",
    "mvt_target",
    "mvt_witness",
    "rolle_witness",
]

SCAN_POINTS = 1001
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class Witness:
    """A point ``c`` of ``(a, b)`` and how closely it attains the target."""

    c: float
    attained_value: float
    target_value: float
    gap: float


def _check_interval(a: float, b: float) -> None:
    if not (math.isfinite(a) and math.isfinite(b) and 0.0 < a < b):
        raise DomainError(f"witness search requires 0 < a < b: got a={a}, b={b}")


def _search(
    value: Callable[[float], float],
    target: float,
    a: float,
    b: float,
    tol: float,
) -> Witness:
    def defect(x: float) -> float:
        return value(x) - target

    xs = np.linspace(a, b, SCAN_POINTS)[1:-1]
    ds = [defect(float(x)) for x in xs]

    if all(abs(d) <= tol for d in ds):
        c = 0.5 * (a + b)
        attained = value(c)
        return Witness(c, attained, target, abs(attained - target))

    for i, d in enumerate(ds):
        if abs(d) <= tol:
            c = float(xs[i])
            return Witness(c, d + target, target, abs(d))

        if i + 1 < len(ds) and d * ds[i + 1] < 0.0:
            lo, hi, dlo = float(xs[i]), float(xs[i + 1]), d
            c, dc = lo, d
            for _ in range(MAX_BISECTIONS):
                mid = 0.5 * (lo + hi)
                if mid in (lo, hi):
                    break
                dmid = defect(mid)
                if abs(dmid) < abs(dc):
                    c, dc = mid, dmid
                if dmid == 0.0:
                    break
                if (dmid < 0.0) == (dlo < 0.0):
                    lo, dlo = mid, dmid
                else:
                    hi = mid

            if abs(dc) <= tol:
                return Witness(c, dc + target, target, abs(dc))

    raise SearchFailure(
        f"no witness in ({a:g}, {b:g}) within tol={tol:g}",
        min_gap=min(abs(d) for d in ds),
    )


def rolle_witness(
    f: ScalarFn, ord: FracOrder, a: float, b: float, tol: float = 1.0e-10
) -> Witness:
    """A point ``c`` with ``|D f(c)| <= tol`` when ``f(a) = f(b)``.

    :raises ContractError: if ``f(a)`` and ``f(b)`` differ.
    :raises SearchFailure: if no such point is found.
    """
    _check_interval(a, b)
    fa, fb = f(a), f(b)
    if abs(fb - fa) > 1.0e-12 * (1.0 + abs(fa)):
        raise ContractError(f"Rolle requires f(a) = f(b): got {fa!r} and {fb!r}")

    return _search(lambda x: m_derivative_closed(f, ord, x), 0.0, a, b, tol)


def mvt_target(f: ScalarFn, ord: FracOrder, a: float, b: float) -> float:
    """Value the M-derivative must attain somewhere in ``(a, b)``."""
    alpha = ord.alpha
    span = ord.gamma_factor * (b**alpha - a**alpha) / alpha
    return (f(b) - f(a)) / span


def mvt_witness(
    f: ScalarFn, ord: FracOrder, a: float, b: float, tol: float = 1.0e-10
) -> Witness:
    """A point ``c`` with ``|D f(c) - mvt_target(f, ord, a, b)| <= tol``."""
    _check_interval(a, b)
    target = mvt_target(f, ord, a, b)
    return _search(lambda x: m_derivative_closed(f, ord, x), target, a, b, tol)


def extended_mvt_witness(
    f: ScalarFn,
    g: ScalarFn,
    ord: FracOrder,
    a: float,
    b: float,
    tol: float = 1.0e-10,
) -> Witness:
    """A point ``c`` with ``D f(c) / D g(c)`` within *tol* of
    ``(f(b) - f(a)) / (g(b) - g(a))``.

    The weights of the two derivatives cancel in the ratio, so the witness
    does not depend on the order.

    :raises ContractError: if ``g(a)`` and ``g(b)`` nearly coincide.
    :raises DegenerateDenominatorError: if ``D g`` vanishes on the scan grid.
    """
    _check_interval(a, b)
    dg_span = g(b) - g(a)
    if abs(dg_span) < 1.0e-9:
        raise ContractError(f"extended MVT requires g(b) != g(a): got span {dg_span!r}")

    # a sign change of D g hides a zero between grid points
    xs = np.linspace(a, b, SCAN_POINTS)[1:-1]
    signs = {math.copysign(1.0, m_derivative_closed(g, ord, float(x))) for x in xs}
    zeros = [float(x) for x in xs if m_derivative_closed(g, ord, float(x)) == 0.0]
    if zeros or len(signs) > 1:
        where = f"at {zeros[0]:g}" if zeros else "between grid points"
        raise DegenerateDenominatorError(f"D g vanishes {where} in ({a:g}, {b:g})")

    target = (f(b) - f(a)) / dg_span
    return _search(
        lambda x: m_derivative_closed(f, ord, x) / m_derivative_closed(g, ord, x),
        target,
        a,
        b,
        tol,
    )
