"""Richardson tables and extrapolated central differences.

These are fallback oracles: they are used only when a function does not
carry an analytic derivative.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

__all__ = ["central_derivative", "nth_derivative", "richardson"]


def richardson(values: Sequence[float], ratio: float, order: int = 1) -> float:
    """Extrapolate a sequence of approximations to its limit.

    *values* are computed at steps ``h, h * ratio, h * ratio**2, ...`` and
    carry an error expansion in powers ``h**order, h**(2 * order), ...``.
    A full Neville table is built and its last diagonal entry returned.
    """
    if not values:
        raise ValueError("need at least one value to extrapolate")
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must lie in (0, 1): got {ratio}")

    row = [float(v) for v in values]
    for j in range(1, len(row)):
        factor = ratio ** (-order * j)
        row = [
            (factor * row[i + 1] - row[i]) / (factor - 1.0)
            for i in range(len(row) - 1)
        ]

    return row[0]


def central_derivative(
    fn: Callable[[float], float],
    t: float,
    h: float | None = None,
    levels: int = 4,
) -> float:
    """First derivative by Richardson-extrapolated central differences.

    The default step is ``1e-2 * |t|`` (or ``1e-2`` at the origin), halved
    ``levels - 1`` times.
    """
    if h is None:
        h = 1.0e-2 * (abs(t) if t != 0.0 else 1.0)

    quotients = []
    for k in range(levels):
        hk = h * 0.5**k
        quotients.append((fn(t + hk) - fn(t - hk)) / (2.0 * hk))

    result = richardson(quotients, 0.5, order=2)
    if not math.isfinite(result):
        raise ArithmeticError(f"non-finite finite difference at t={t}")

    return result


def nth_derivative(
    fn: Callable[[float], float],
    t: float,
    n: int,
    h: float | None = None,
) -> float:
    """*n*-th derivative by nesting :func:`central_derivative`.

    Accuracy degrades quickly with *n*; intended for ``n <= 3``.
    """
    if n < 0:
        raise ValueError(f"derivative order must be non-negative: got {n}")
    if n == 0:
        return fn(t)

    if h is None:
        h = 1.0e-2 * (abs(t) if t != 0.0 else 1.0)

    inner_h = 0.5 * h

    def inner(x: float) -> float:
        return nth_derivative(fn, x, n - 1, h=inner_h)

    return central_derivative(inner, t, h=h, levels=3 if n > 1 else 4)
