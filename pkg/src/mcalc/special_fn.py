r"""Gamma function and the one-parameter Mittag-Leffler function.

The Mittag-Leffler function

.. math::

    E_\beta(x) = \sum_{k=0}^\infty \frac{x^k}{\Gamma(\beta k + 1)}

is evaluated by direct Taylor summation, the kept terms being added with
:func:`math.fsum`. Every call made by the rest of the
library has an argument close to zero, where the series converges in a
handful of terms, so no asymptotic expansion is provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mcalc.errors import ConvergenceError, DomainError

__all__ = ["DEFAULT_SERIES", "SeriesConfig", "gamma", "mittag_leffler"]

# above this argument math.gamma overflows a double
_GAMMA_DIRECT_MAX = 171.0


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation controls for the Mittag-Leffler series."""

    #: Summation stops once the next term is below ``rel_tol * |partial sum|``.
    rel_tol: float = 1.0e-15
    #: Hard cap on the number of summed terms.
    max_terms: int = 200

    def __post_init__(self) -> None:
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError(f"rel_tol must lie in (0, 1): got {self.rel_tol}")
        if self.max_terms < 2:
            raise DomainError(f"max_terms must be at least 2: got {self.max_terms}")


DEFAULT_SERIES = SeriesConfig()


def gamma(x: float) -> float:
    r"""Evaluate :math:`\Gamma(x)` for :math:`x > 0`.

    Backed by :func:`math.gamma`, which is accurate to a few ulps on
    :math:`(0, 171)`.

    :raises DomainError: if *x* is non-finite or not positive.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"gamma requires a finite positive argument: got {x}")

    return math.gamma(x)


def _inv_gamma_term(x: float, k: int, beta: float) -> float:
    # x**k / Gamma(beta k + 1), switching to logs once Gamma would overflow
    z = beta * k + 1.0
    log_power = k * math.log(abs(x))
    if z < _GAMMA_DIRECT_MAX and log_power < 700.0:
        return x**k / math.gamma(z)

    sign = -1.0 if (x < 0.0 and k % 2 == 1) else 1.0
    log_mag = log_power - math.lgamma(z)
    return sign * math.exp(log_mag) if log_mag > -745.0 else 0.0


def mittag_leffler(
    beta: float, x: float, cfg: SeriesConfig = DEFAULT_SERIES
) -> float:
    r"""Evaluate the one-parameter Mittag-Leffler function :math:`E_\beta(x)`.

    The partial sum is truncated once the magnitude of the next term falls
    below ``cfg.rel_tol`` times the magnitude of the running sum, with the
    threshold shrunk by ``1 - r`` (``r`` the current term ratio) so that the
    whole geometric tail, not just one term, stays below the tolerance.
    Negative arguments are accepted (the series alternates), but only
    moderate :math:`|x|` is within contract.

    :raises DomainError: if *beta* is not positive or *x* is not finite.
    :raises ConvergenceError: if the truncation criterion is not met within
        ``cfg.max_terms`` terms.
    """
    beta = float(beta)
    x = float(x)
    if not math.isfinite(beta) or beta <= 0.0:
        raise DomainError(f"beta must be positive: got {beta}")
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite: got {x}")

    total = 1.0
    if x == 0.0:
        return total

    # the running total only drives the stopping rule; the returned value
    # is the correctly rounded sum of the kept terms
    terms = [total]
    prev, term = 1.0, 0.0
    for k in range(1, cfg.max_terms):
        term = _inv_gamma_term(x, k, beta)
        terms.append(term)
        # past the peak the term ratios decrease, so |term| / (1 - ratio)
        # bounds everything still unsummed
        ratio = abs(term) / abs(prev) if prev != 0.0 else 0.0
        if ratio < 1.0 and abs(term) < cfg.rel_tol * (1.0 - ratio) * abs(total + term):
            return math.fsum(terms)
        total += term
        prev = term

    raise ConvergenceError(
        f"Mittag-Leffler series for beta={beta}, x={x} did not converge "
        f"in {cfg.max_terms} terms (last term {abs(term):.3e})",
        last_term=abs(term),
    )
