r"""Local M-derivative and the comparison derivatives.

The local M-derivative of order :math:`\alpha` with Mittag-Leffler parameter
:math:`\beta` is

.. math::

    D_M^{\alpha,\beta} f(t) = \lim_{\epsilon \to 0}
        \frac{f(t E_\beta(\epsilon t^{-\alpha})) - f(t)}{\epsilon},

which for differentiable :math:`f` equals
:math:`t^{1 - \alpha} f'(t) / \Gamma(\beta + 1)`. Both routes are provided:
:func:`m_derivative_limit` evaluates the difference quotient on a geometric
epsilon ladder and extrapolates, :func:`m_derivative_closed` uses the
classical derivative.

The limit at :math:`t = 0^+` is not computed: both the weight
:math:`t^{1-\alpha}` and the Mittag-Leffler argument degenerate, so the
limit-based operators require ``t >= MIN_T``.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from mcalc.errors import ContractError, DomainError, EvaluationError, McalcError
from mcalc.numdiff import central_derivative, nth_derivative, richardson
from mcalc.special_fn import DEFAULT_SERIES, SeriesConfig, gamma, mittag_leffler

__all__ = [
    "DEFAULT_LIMIT",
    "MIN_T",
    "FracOrder",
    "LimitConfig",
    "ScalarFn",
    "alternative_derivative",
    "conformable_derivative",
    "dilation_gaps",
    "m_derivative_closed",
    "m_derivative_higher",
    "m_derivative_limit",
]

#: Smallest abscissa accepted by the limit-based operators.
MIN_T = 1.0e-6

_EPS = 2.0**-52
# relative change below which successive extrapolants count as settled
_SETTLED = 1.0e-6


# {{{ types


@dataclass(frozen=True)
class FracOrder:
    """The ``(alpha, beta)`` pair that parametrizes every operator."""

    #: Order of the derivative, in :math:`(0, 1]`.
    alpha: float
    #: Mittag-Leffler parameter, positive.
    beta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha <= 1.0):
            raise DomainError(f"alpha must lie in (0, 1]: got {self.alpha}")
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise DomainError(f"beta must be positive: got {self.beta}")

    @property
    def gamma_factor(self) -> float:
        r""":math:`\Gamma(\beta + 1)`, the normalization of both operators."""
        return gamma(self.beta + 1.0)


@dataclass(frozen=True)
class ScalarFn:
    """A real function on :math:`(0, \\infty)` with optional derivatives.

    *classical_derivative* is an oracle channel: when present it always wins
    over finite differences. *higher_derivatives* holds
    :math:`f'', f''', \\dots` in that order and may be shorter than needed,
    in which case the missing orders are obtained by finite differences of
    the highest one available.
    """

    eval: Callable[[float], float]
    classical_derivative: Callable[[float], float] | None = None
    label: str = "f"
    higher_derivatives: tuple[Callable[[float], float], ...] = field(
        default=(), repr=False
    )

    def __call__(self, t: float) -> float:
        return self.eval(t)

    @property
    def has_derivative(self) -> bool:
        return self.classical_derivative is not None

    def derivative(self, t: float) -> float:
        """First derivative: analytic if supplied, else finite differences."""
        if self.classical_derivative is not None:
            return self.classical_derivative(t)
        return central_derivative(self.eval, t)

    def nth_derivative(self, n: int, t: float) -> float:
        if n < 0:
            raise DomainError(f"derivative order must be non-negative: got {n}")
        if n == 0:
            return self.eval(t)

        known: list[Callable[[float], float]] = [self.eval]
        if self.classical_derivative is not None:
            known.append(self.classical_derivative)
            known.extend(self.higher_derivatives)

        if n < len(known):
            return known[n](t)

        top = len(known) - 1
        return nth_derivative(known[top], t, n - top)

    def derivative_mismatch(
        self,
        ts: Sequence[float],
        h: float = 1.0e-5,
        atol: float = 1.0e-6,
        rtol: float = 1.0e-6,
    ) -> float:
        """Largest ratio of the finite difference error to its allowance.

        A value ``<= 1`` means the supplied derivative agrees with a plain
        central difference of :attr:`eval` at every point of *ts*.
        """
        if self.classical_derivative is None:
            raise ContractError(f"{self.label!r} has no classical derivative")

        worst = 0.0
        for t in ts:
            fd = (self.eval(t + h) - self.eval(t - h)) / (2.0 * h)
            exact = self.classical_derivative(t)
            worst = max(worst, abs(fd - exact) / (atol + rtol * abs(exact)))

        return worst


@dataclass(frozen=True)
class LimitConfig:
    r"""Epsilon ladder used to evaluate the limit definitions.

    The ladder is :math:`\epsilon_k = \epsilon_0 s^k`. Difference quotients
    on ``levels`` consecutive rungs are combined by Richardson extrapolation
    assuming an error expansion in integer powers of :math:`\epsilon`.
    While more rungs are allowed (``max_rungs``), the window slides down the
    ladder and keeps the extrapolant that agrees best with both of its
    neighbours, stopping once that agreement has settled and then degrades
    under rounding. This handles functions that vary on a scale much finer
    than the first rung.
    ``max_rungs = levels`` gives a single fixed window, and ``levels = 1``
    the plain difference quotient.
    """

    #: First rung; ``None`` selects the scale-aware ``1e-2 * t**alpha``.
    eps0: float | None = None
    #: Ratio between successive rungs.
    shrink: float = 0.5
    #: Rungs per Richardson window.
    levels: int = 4
    #: Upper bound on the rungs evaluated by the sliding window.
    max_rungs: int = 40

    def __post_init__(self) -> None:
        if self.eps0 is not None and not (
            math.isfinite(self.eps0) and self.eps0 > 0.0
        ):
            raise DomainError(f"eps0 must be positive: got {self.eps0}")
        if not 0.0 < self.shrink < 1.0:
            raise DomainError(f"shrink must lie in (0, 1): got {self.shrink}")
        if self.levels < 1:
            raise DomainError(f"levels must be at least 1: got {self.levels}")
        if self.max_rungs < self.levels:
            raise DomainError(
                f"max_rungs must be at least levels={self.levels}: got {self.max_rungs}"
            )

    def first_rung(self, t: float, alpha: float) -> float:
        return 1.0e-2 * t**alpha if self.eps0 is None else self.eps0

    def ladder(self, t: float, alpha: float) -> list[float]:
        """The rungs of the first Richardson window."""
        eps0 = self.first_rung(t, alpha)
        return [eps0 * self.shrink**k for k in range(self.levels)]


DEFAULT_LIMIT = LimitConfig()

# }}}


# {{{ helpers


def _check_t(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise DomainError(f"t must be finite and positive: got {t}")
    return t


def _check_limit_t(t: float) -> float:
    t = _check_t(t)
    if t < MIN_T:
        raise DomainError(f"limit operators require t >= {MIN_T}: got {t}")
    return t


def _check_alpha(alpha: float) -> float:
    if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise DomainError(f"alpha must lie in (0, 1]: got {alpha}")
    return float(alpha)


def _evaluate(f: Callable[[float], float], x: float) -> float:
    try:
        return f(x)
    except McalcError:
        raise
    except (ArithmeticError, ValueError) as exc:
        raise EvaluationError(f"evaluating f at {x!r} failed: {exc}") from exc


def _extrapolated_quotient(
    f: Callable[[float], float],
    t: float,
    alpha: float,
    step: Callable[[float], float],
    cfg: LimitConfig,
) -> float:
    # step(eps) returns the perturbed abscissa for a ladder rung
    ft = _evaluate(f, t)
    if not math.isfinite(ft):
        raise EvaluationError(f"f({t}) is not finite")

    eps0 = cfg.first_rung(t, alpha)

    def quotient(k: int) -> float:
        eps = eps0 * cfg.shrink**k
        q = (_evaluate(f, step(eps)) - ft) / eps
        if not math.isfinite(q):
            raise EvaluationError(
                f"non-finite difference quotient at t={t}, eps={eps:.3e}"
            )
        return q

    n = cfg.levels
    quotients = [quotient(k) for k in range(n)]
    estimates = [richardson(quotients, cfg.shrink, order=1)]
    changes = [math.inf]
    best, best_score = estimates[0], math.inf

    for k in range(n, cfg.max_rungs):
        quotients.append(quotient(k))
        current = richardson(quotients[-n:], cfg.shrink, order=1)
        change = abs(current - estimates[-1])
        if change <= 4.0 * _EPS * abs(current):
            return current

        # an estimate is judged by its distance to both neighbours, so that
        # one chance agreement in the pre-asymptotic range does not count
        score = max(changes[-1], change)
        if score < best_score:
            best, best_score = estimates[-1], score
        elif score > 2.0 * best_score and best_score <= _SETTLED * abs(best):
            # rounding noise now dominates the truncation error
            break

        estimates.append(current)
        changes.append(change)

    if best_score == math.inf:
        return estimates[-1]
    return best


# }}}


# {{{ M-derivative


def m_derivative_closed(f: ScalarFn, ord: FracOrder, t: float) -> float:
    r"""Closed form :math:`t^{1-\alpha} f'(t) / \Gamma(\beta + 1)`.

    :raises DomainError: if ``t <= 0``.
    :raises ContractError: if *f* carries no classical derivative.
    """
    t = _check_t(t)
    if f.classical_derivative is None:
        raise ContractError(
            f"{f.label!r} has no classical derivative; use m_derivative_limit"
        )

    return t ** (1.0 - ord.alpha) * f.classical_derivative(t) / ord.gamma_factor


def m_derivative_limit(
    f: Callable[[float], float],
    ord: FracOrder,
    t: float,
    cfg: LimitConfig = DEFAULT_LIMIT,
    series: SeriesConfig = DEFAULT_SERIES,
) -> float:
    """Local M-derivative from its limit definition.

    The difference quotient is evaluated with the dilated abscissa
    ``t * E_beta(eps * t**-alpha)`` on the ladder of *cfg* and extrapolated
    to ``eps -> 0``.

    :raises DomainError: if ``t < MIN_T``.
    :raises EvaluationError: if any rung yields a non-finite quotient.
    """
    t = _check_limit_t(t)
    scale = t ** (-ord.alpha)

    def step(eps: float) -> float:
        return t * mittag_leffler(ord.beta, eps * scale, series)

    return _extrapolated_quotient(f, t, ord.alpha, step, cfg)


def dilation_gaps(
    f: Callable[[float], float],
    ord: FracOrder,
    t: float,
    cfg: LimitConfig = DEFAULT_LIMIT,
    series: SeriesConfig = DEFAULT_SERIES,
) -> list[float]:
    """``|f(t E_beta(eps t**-alpha)) - f(t)|`` on every rung of the ladder.

    An α-differentiable function is continuous, so these gaps must shrink
    to zero with the rungs.
    """
    t = _check_limit_t(t)
    ft = f(t)
    scale = t ** (-ord.alpha)
    return [
        abs(f(t * mittag_leffler(ord.beta, eps * scale, series)) - ft)
        for eps in cfg.ladder(t, ord.alpha)
    ]


def m_derivative_higher(
    f: ScalarFn, n: int, alpha_n: float, beta: float, t: float
) -> float:
    r"""Order-:math:`n` local M-derivative for :math:`\alpha_n \in (n, n+1]`.

    Evaluates :math:`t^{n+1-\alpha_n} f^{(n+1)}(t) / \Gamma(\beta + 1)`.
    The derivative :math:`f^{(n+1)}` is taken from *f* when supplied and by
    finite differences otherwise. For ``n = 0`` this is
    :func:`m_derivative_closed`.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer: got {n}")
    n = int(n)
    if not (math.isfinite(alpha_n) and n < alpha_n <= n + 1):
        raise DomainError(f"alpha_n must lie in ({n}, {n + 1}]: got {alpha_n}")
    if not (math.isfinite(beta) and beta > 0.0):
        raise DomainError(f"beta must be positive: got {beta}")
    t = _check_t(t)

    dn = f.nth_derivative(n + 1, t)
    return t ** (n + 1 - alpha_n) * dn / gamma(beta + 1.0)


# }}}


# {{{ comparison derivatives


def alternative_derivative(
    f: Callable[[float], float],
    alpha: float,
    t: float,
    cfg: LimitConfig = DEFAULT_LIMIT,
) -> float:
    r"""Limit of :math:`[f(t e^{\epsilon t^{-\alpha}}) - f(t)] / \epsilon`."""
    alpha = _check_alpha(alpha)
    t = _check_limit_t(t)
    scale = t ** (-alpha)

    def step(eps: float) -> float:
        return t * math.exp(eps * scale)

    return _extrapolated_quotient(f, t, alpha, step, cfg)


def conformable_derivative(
    f: Callable[[float], float],
    alpha: float,
    t: float,
    cfg: LimitConfig = DEFAULT_LIMIT,
) -> float:
    r"""Limit of :math:`[f(t + \epsilon t^{1-\alpha}) - f(t)] / \epsilon`."""
    alpha = _check_alpha(alpha)
    t = _check_limit_t(t)
    weight = t ** (1.0 - alpha)

    def step(eps: float) -> float:
        return t + eps * weight

    return _extrapolated_quotient(f, t, alpha, step, cfg)


# }}}
