"""Executable invariant suites behind ``mcalc verify``.

Every check returns a :class:`Check` holding the largest observed residual
and the tolerance it was held to. Randomized checks draw from
:func:`numpy.random.default_rng` seeded by ``MCALC_SEED`` (default
``DEFAULT_SEED``), so reruns are reproducible.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
from collections.abc import Callable, Iterator
from dataclasses import dataclass

import numpy as np

from mcalc import functions as fns
from mcalc.errors import McalcError
from mcalc.integration import (
    ftc_roundtrip,
    integral_bound_check,
    integration_by_parts_check,
    inverse_roundtrip,
    m_integral,
    weighted_quad,
)
from mcalc.ode import (
    FIGURE_ALPHAS,
    FIGURE_PARAMETERS,
    LinearProblem,
    eigen_problem,
    eigen_solution,
    linear_solution,
    residual,
    solve_eigen,
    solve_linear,
)
from mcalc.operators import (
    FracOrder,
    ScalarFn,
    alternative_derivative,
    conformable_derivative,
    dilation_gaps,
    m_derivative_closed,
    m_derivative_higher,
    m_derivative_limit,
)
from mcalc.special_fn import SeriesConfig, gamma, mittag_leffler
from mcalc.theorems import extended_mvt_witness, mvt_witness, rolle_witness

__all__ = ["DEFAULT_SEED", "SUITES", "Check", "run_suite", "seed_from_env"]

DEFAULT_SEED = 20170611

ALPHAS = (0.25, 0.5, 0.75, 1.0)
BETAS = (0.5, 1.0, 1.5)
TS = (0.5, 1.0, 2.0, 4.0)


@dataclass(frozen=True)
class Check:
    name: str
    max_residual: float
    tol: float
    cases: int

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def seed_from_env() -> int:
    raw = os.environ.get("MCALC_SEED")
    return int(raw) if raw else DEFAULT_SEED


def scaled(x: float, ref: float, scale: float | None = None) -> float:
    """``|x - ref| / (1 + scale)``, with *scale* defaulting to ``|ref|``."""
    return abs(x - ref) / (1.0 + (abs(ref) if scale is None else scale))


def _grid() -> Iterator[tuple[FracOrder, ScalarFn, float]]:
    for alpha, beta in itertools.product(ALPHAS, BETAS):
        ord = FracOrder(alpha, beta)
        for f in fns.battery(alpha):
            for t in TS:
                yield ord, f, t


def _random_order(rng: np.random.Generator, strict: bool = False) -> FracOrder:
    alpha = rng.uniform(0.1, 0.95) if strict else rng.uniform(0.1, 1.0)
    return FracOrder(float(alpha), float(rng.uniform(0.3, 2.0)))


# {{{ special functions


def check_ml_exp() -> Check:
    worst = max(
        abs(mittag_leffler(1.0, x) - math.exp(x)) / math.exp(abs(x))
        for x in np.linspace(-5.0, 5.0, 101)
    )
    return Check("E_1(x) = exp(x) on [-5, 5]", worst, 1.0e-12, 101)


def check_ml_cosh() -> Check:
    xs = np.linspace(0.0, 10.0, 101)
    worst = max(abs(mittag_leffler(2.0, x) - math.cosh(math.sqrt(x))) for x in xs)
    return Check("E_2(x) = cosh(sqrt x) on [0, 10]", worst, 1.0e-10, 101)


def check_ml_truncation() -> Check:
    worst, cases = 0.0, 0
    for beta in (0.5, 1.0, 1.7, 2.5):
        for x in np.linspace(-3.0, 3.0, 41):
            for rel_tol in (1.0e-6, 1.0e-9, 1.0e-12):
                loose = mittag_leffler(beta, x, SeriesConfig(rel_tol))
                tight = mittag_leffler(beta, x, SeriesConfig(rel_tol / 10))
                worst = max(worst, abs(loose - tight) / (abs(tight) * rel_tol))
                cases += 1
    return Check("series truncation is monotone (in units of rel_tol)", worst, 1.0, cases)


def check_gamma_recurrence() -> Check:
    xs = np.linspace(0.1, 50.0, 500)
    worst = max(abs(gamma(x + 1) - x * gamma(x)) / gamma(x + 1) for x in xs)
    return Check("Gamma(x+1) = x Gamma(x) on [0.1, 50]", worst, 1.0e-12, xs.size)


# }}}


# {{{ operators


def check_limit_vs_closed() -> Check:
    worst, cases = 0.0, 0
    for ord, f, t in _grid():
        exact = m_derivative_closed(f, ord, t)
        worst = max(worst, abs(m_derivative_limit(f, ord, t) - exact) / abs(exact))
        cases += 1
    return Check("limit definition vs closed form (relative)", worst, 1.0e-6, cases)


def check_continuity() -> Check:
    # 0 when the last three dilation gaps decrease, 1 otherwise
    worst, cases = 0.0, 0
    for ord, f, t in _grid():
        g = dilation_gaps(f, ord, t)[-3:]
        worst = max(worst, 0.0 if g[0] > g[1] > g[2] else 1.0)
        cases += 1
    return Check("dilation gaps shrink over the last three rungs", worst, 0.0, cases)


def check_alternative_reduction() -> Check:
    worst, cases = 0.0, 0
    for ord, f, t in _grid():
        if ord.beta != 1.0:
            continue
        m = m_derivative_limit(f, ord, t)
        worst = max(worst, scaled(alternative_derivative(f, ord.alpha, t), m))
        cases += 1
    return Check("beta = 1 recovers the alternative derivative", worst, 1.0e-8, cases)


def check_conformable_agreement() -> Check:
    worst, cases = 0.0, 0
    for ord, f, t in _grid():
        if ord.beta != 1.0:
            continue
        m = m_derivative_limit(f, ord, t)
        worst = max(worst, abs(conformable_derivative(f, ord.alpha, t) - m) / abs(m))
        cases += 1
    return Check("beta = 1 agrees with the conformable derivative", worst, 1.0e-6, cases)


def check_classical_reduction() -> Check:
    ord = FracOrder(1.0, 1.0)
    worst, cases = 0.0, 0
    for f in fns.battery(1.0):
        for t in TS:
            exact = f.derivative(t)
            worst = max(
                worst,
                scaled(m_derivative_limit(f, ord, t), exact),
                scaled(m_derivative_closed(f, ord, t), exact),
            )
            cases += 1
    return Check("alpha = beta = 1 gives the classical derivative", worst, 1.0e-8, cases)


def check_higher_reduction() -> Check:
    worst, cases = 0.0, 0
    for ord, f, t in _grid():
        closed = m_derivative_closed(f, ord, t)
        higher = m_derivative_higher(f, 0, ord.alpha, ord.beta, t)
        worst = max(worst, scaled(higher, closed))
        cases += 1
    return Check("order-0 higher derivative equals the closed form", worst, 1.0e-14, cases)


_OUTER = (fns.sin_a(1.0), fns.cos_a(1.0), fns.exp_a(0.5), fns.power(2.0), fns.power(3.0))


def _in_range(outer: ScalarFn, g: ScalarFn, t: float) -> bool:
    # the composite and its derivative must stay well inside double range
    # on the whole dilation ladder
    try:
        span = [g(t * s) for s in (0.99, 1.0, 1.01)]
        values = [outer(x) for x in span] + [outer.derivative(x) for x in span]
    except OverflowError:
        return False
    return all(math.isfinite(v) and abs(v) < 1.0e100 for v in values)


@functools.lru_cache(maxsize=4)
def _algebraic_residuals(seed: int, draws: int) -> dict[str, float]:
    rng = np.random.default_rng(seed)
    worst = dict.fromkeys(("linearity", "product", "quotient", "chain"), 0.0)
    done = 0
    while done < draws:
        ord = _random_order(rng)
        t = float(rng.uniform(0.5, 4.0))
        bat = fns.battery(ord.alpha)
        f, g = (bat[i] for i in rng.integers(0, len(bat), size=2))
        a, b = (float(v) for v in rng.uniform(-5.0, 5.0, size=2))
        outer = _OUTER[int(rng.integers(0, len(_OUTER)))]
        if not _in_range(outer, g, t):
            # e.g. exp(exp(t^alpha / alpha)) for small alpha; redrawn
            continue
        done += 1

        def D(fn: Callable[[float], float]) -> float:
            return m_derivative_limit(fn, ord, t)

        df, dg = D(f), D(g)
        lin = D(fns.linear_combination(a, f, b, g))
        worst["linearity"] = max(
            worst["linearity"],
            abs(lin - a * df - b * dg) / (1 + abs(a * df) + abs(b * dg)),
        )

        prod = D(fns.product(f, g))
        worst["product"] = max(
            worst["product"],
            abs(prod - f(t) * dg - g(t) * df) / (1 + abs(f(t) * dg) + abs(g(t) * df)),
        )

        if abs(g(t)) >= 0.1:
            expected = (g(t) * df - f(t) * dg) / g(t) ** 2
            worst["quotient"] = max(worst["quotient"], scaled(D(fns.quotient(f, g)), expected))

        expected = outer.derivative(g(t)) * dg
        worst["chain"] = max(worst["chain"], scaled(D(fns.compose(outer, g)), expected))

    return worst


def _rule_check(rule: str, tol: float, draws: int = 200) -> Check:
    worst = _algebraic_residuals(seed_from_env(), draws)[rule]
    return Check(f"{rule} rule on random draws", worst, tol, draws)


def check_linearity() -> Check:
    return _rule_check("linearity", 1.0e-8)


def check_product_rule() -> Check:
    return _rule_check("product", 1.0e-7)


def check_quotient_rule() -> Check:
    return _rule_check("quotient", 1.0e-7)


def check_chain_rule() -> Check:
    return _rule_check("chain", 1.0e-7)


# }}}


# {{{ integration


def check_ftc() -> Check:
    worst, cases = 0.0, 0
    for ord, f, t in _grid():
        if t <= 0.5:
            continue
        lhs, rhs = ftc_roundtrip(f, ord, 0.5, t)
        worst = max(worst, scaled(lhs, rhs))
        cases += 1
    return Check("I(D f) = f(t) - f(a)", worst, 1.0e-8, cases)


def check_inverse() -> Check:
    family = [fns.sin_a(1.0), fns.exp_a(1.0), fns.power(2.0), fns.power(3.0)]
    family.append(ScalarFn(lambda x: 1.0 - 2.0 * x + 0.5 * x**3, label="poly"))
    worst, cases = 0.0, 0
    for alpha, beta in itertools.product(ALPHAS, BETAS):
        ord = FracOrder(alpha, beta)
        for f in family:
            for t in (1.0, 2.0, 4.0):
                lhs, rhs = inverse_roundtrip(f, ord, 0.5, t)
                worst = max(worst, scaled(lhs, rhs))
                cases += 1
    return Check("D(I f) = f", worst, 1.0e-6, cases)


def check_integration_by_parts(draws: int = 50) -> Check:
    rng = np.random.default_rng(seed_from_env() + 1)
    worst = 0.0
    for _ in range(draws):
        ord = _random_order(rng, strict=True)
        bat = fns.battery(ord.alpha)
        f, g = (bat[i] for i in rng.integers(0, len(bat), size=2))
        a = float(rng.uniform(0.2, 2.0))
        b = a + float(rng.uniform(0.2, 3.0))
        res = integration_by_parts_check(f, g, ord, a, b)
        boundary = f(b) * g(b) - f(a) * g(a)
        worst = max(worst, abs(res) / (1 + abs(boundary)))
    return Check("integration by parts", worst, 1.0e-8, draws)


def _bound_family(alpha: float) -> list[Callable[[float], float]]:
    extra = [
        fns.sin_a(5.0),
        fns.cos_a(3.0),
        ScalarFn(lambda x: x * math.sin(4.0 * x) - 0.3, label="xsin4x"),
    ]
    return [*fns.battery(alpha), *extra]


def check_inequalities(draws: int = 1000) -> Check:
    rng = np.random.default_rng(seed_from_env() + 2)
    worst = 0.0
    for _ in range(draws):
        ord = _random_order(rng, strict=True)
        family = _bound_family(ord.alpha)
        f = family[int(rng.integers(0, len(family)))]
        a = float(rng.uniform(0.1, 3.0))
        t = a + float(rng.uniform(0.05, 4.0))
        bc = integral_bound_check(f, ord, a, t)
        worst = max(
            worst,
            bc.abs_of_integral - bc.integral_of_abs,
            bc.integral_of_abs - bc.sup_bound,
        )
    return Check("|I f| <= I|f| <= Gamma N (t^a - a^a)/a (excess)", max(worst, 0.0), 1.0e-10, draws)


def check_additivity() -> Check:
    worst, cases = 0.0, 0
    for ord, f, _ in _grid():
        whole = m_integral(f, ord, 0.5, 4.0)
        parts = m_integral(f, ord, 0.5, 1.7) + m_integral(f, ord, 1.7, 4.0)
        worst = max(worst, scaled(parts, whole))
        cases += 1
    return Check("I_a^c = I_a^b + I_b^c", worst, 2.0e-10, cases)


def check_integral_linearity() -> Check:
    worst, cases = 0.0, 0
    for alpha, beta in itertools.product(ALPHAS, BETAS):
        ord = FracOrder(alpha, beta)
        bat = fns.battery(alpha)
        for f, g in zip(bat, bat[1:]):
            lin = fns.linear_combination(2.5, f, -1.5, g)
            lhs = m_integral(lin, ord, 0.0, 3.0)
            rhs = 2.5 * m_integral(f, ord, 0.0, 3.0) - 1.5 * m_integral(g, ord, 0.0, 3.0)
            worst = max(worst, scaled(lhs, rhs))
            cases += 1
    return Check("M-integral is linear", worst, 1.0e-9, cases)


def check_substitution() -> Check:
    worst, cases = 0.0, 0
    for ord, f, _ in _grid():
        for a, t in ((0.02, 1.0), (0.5, 4.0)):
            direct = weighted_quad(f, ord, a, t)
            worst = max(worst, abs(m_integral(f, ord, a, t) - direct) / abs(direct))
            cases += 1
    return Check("u = x^alpha substitution vs direct quadrature", worst, 1.0e-10, cases)


# }}}


# {{{ ode


def _eigen_cases() -> Iterator[tuple[float, float, FracOrder]]:
    for beta, lam, u0 in FIGURE_PARAMETERS.values():
        for alpha in FIGURE_ALPHAS:
            yield lam, u0, FracOrder(alpha, beta)
    yield -1.5, 3.0, FracOrder(0.4, 0.8)
    yield 0.0, 7.0, FracOrder(0.6, 1.2)


def check_eigen_residual() -> Check:
    ts = np.linspace(0.1, 5.0, 50)
    worst, cases = 0.0, 0
    for lam, u0, ord in _eigen_cases():
        u = eigen_solution(lam, u0, ord)
        scale = 1 + max(abs(lam * u(t)) for t in ts)
        problem = eigen_problem(lam, ord, 1.0, u(1.0))
        # analytic derivative, then finite differences only
        for fn in (u, ScalarFn(u.eval)):
            worst = max(worst, residual(fn, problem, ts) / scale)
        cases += 1
    return Check("eigen solutions solve D u = lambda u", worst, 1.0e-6, cases)


def check_perturbed_detected() -> Check:
    ts = np.linspace(0.1, 5.0, 50)
    smallest = math.inf
    for lam, u0, ord in _eigen_cases():
        if lam == 0.0:
            continue
        u = eigen_solution(lam, u0, ord)
        wrong = ScalarFn(lambda t, u=u: u(t) * (1.0 + 0.01 * t))
        smallest = min(smallest, residual(wrong, eigen_problem(lam, ord, 1.0, u0), ts))
    # reported as the margin below the detection threshold
    return Check("perturbed solutions are rejected (1e-3 / residual)", 1.0e-3 / smallest, 1.0, 1)


def check_linear_vs_eigen() -> Check:
    ts = np.linspace(0.5, 4.0, 15)
    worst, cases = 0.0, 0
    for lam, u0, ord in [(1.0, 20.0, FracOrder(0.5, 0.5)), (-0.7, 2.0, FracOrder(0.8, 1.5))]:
        exact = solve_eigen(lam, u0, ord, ts)
        problem = eigen_problem(lam, ord, float(ts[0]), float(exact.us[0]))
        general = solve_linear(problem, ts)
        worst = max(worst, float(np.max(np.abs(general.us / exact.us - 1.0))))
        cases += 1
    return Check("general and eigen solvers agree", worst, 1.0e-9, cases)


def check_linear_residual() -> Check:
    ts = np.linspace(0.5, 3.0, 8)
    problem_set = [
        (fns.sin_a(1.0), fns.exp_a(0.5), 0.5, 2.0, FracOrder(0.6, 0.5)),
        (fns.power(1.0), fns.cos_a(2.0), 0.5, -1.0, FracOrder(0.9, 1.3)),
    ]
    worst = 0.0
    for P, Q, a, u0, ord in problem_set:
        problem = LinearProblem(P, Q, a, u0, ord)
        u = linear_solution(problem)
        scale = 1 + max(abs(P(t) * u(t)) + abs(Q(t)) for t in ts)
        worst = max(worst, residual(u, problem, ts) / scale)
    return Check("general solutions solve D u + P u = Q", worst, 1.0e-6, len(problem_set))


def check_classical_eigen() -> Check:
    ts = np.linspace(0.0, 5.0, 51)
    worst = 0.0
    for lam in (-2.0, 0.5, 1.0, 2.0):
        curve = solve_eigen(lam, 3.0, FracOrder(1.0, 1.0), ts)
        exact = 3.0 * np.exp(lam * ts)
        worst = max(worst, float(np.max(np.abs(curve.us / exact - 1.0))))
    return Check("alpha = beta = 1 gives u0 exp(lambda t)", worst, 1.0e-12, 4)


def check_monotone() -> Check:
    ts = np.linspace(0.0, 5.0, 501)
    bad = 0
    for lam, u0, ord in _eigen_cases():
        if lam > 0.0:
            curve = solve_eigen(lam, u0, ord, ts)
            bad += int(not np.all(np.diff(curve.us) > 0.0))
    return Check("eigen solutions increase for lambda, u0 > 0", float(bad), 0.0, 1)


# }}}


# {{{ theorems


def rolle_instances() -> list[tuple[ScalarFn, FracOrder, float, float, float]]:
    """Twenty Rolle problems ``(f, ord, a, b, c_exact)``; *c_exact* may be nan."""
    out = []
    for (p, q), (alpha, beta) in zip(
        [(1.0, 3.0), (0.5, 2.0), (2.0, 5.0), (0.2, 0.9), (1.5, 1.6)],
        [(0.5, 1.0), (0.3, 2.0), (0.9, 0.5), (0.7, 1.5), (1.0, 1.0)],
    ):
        f = ScalarFn(lambda t, p=p, q=q: (t - p) * (t - q), lambda t, p=p, q=q: 2 * t - p - q)
        out.append((f, FracOrder(alpha, beta), p, q, 0.5 * (p + q)))

    for d, (alpha, beta) in zip([0.5, 0.9, 1.2, 0.1, 1.5], [(0.5, 1.0), (0.2, 0.7), (0.8, 1.9), (0.4, 1.1), (0.6, 0.3)]):
        out.append((fns.sin_a(1.0), FracOrder(alpha, beta), math.pi / 2 - d, math.pi / 2 + d, math.pi / 2))
    for d, (alpha, beta) in zip([0.5, 1.0, 2.0], [(0.5, 0.5), (0.75, 1.5), (0.35, 1.0)]):
        out.append((fns.cos_a(1.0), FracOrder(alpha, beta), math.pi - d, math.pi + d, math.pi))

    for (p, q), (alpha, beta) in zip(
        [(1.0, 4.0), (0.3, 2.5), (2.0, 3.0), (0.5, 6.0), (1.0, 1.5), (0.8, 5.0), (0.1, 0.4)],
        [(0.5, 1.0), (0.25, 0.5), (0.75, 2.0), (0.4, 1.3), (0.9, 0.8), (0.6, 1.7), (0.3, 1.0)],
    ):
        # (s - s(p)) (s - s(q)) with s = t^alpha / alpha; D vanishes at the midpoint in s
        sp, sq = p**alpha / alpha, q**alpha / alpha
        f = ScalarFn(
            lambda t, a=alpha, sp=sp, sq=sq: (t**a / a - sp) * (t**a / a - sq),
            lambda t, a=alpha, sp=sp, sq=sq: (2 * t**a / a - sp - sq) * t ** (a - 1),
        )
        c = (alpha * 0.5 * (sp + sq)) ** (1 / alpha)
        out.append((f, FracOrder(alpha, beta), p, q, c))
    return out


def mvt_instances() -> list[tuple[ScalarFn, FracOrder, float, float, float]]:
    """Twenty MVT problems ``(f, ord, a, b, c_exact)``; *c_exact* may be nan."""
    out = []
    cases = [
        (2.0, 0.5, 1.0, 1.0, 4.0),
        (2.0, 0.5, 1.7, 1.0, 4.0),
        (3.0, 0.25, 0.5, 0.5, 2.0),
        (3.0, 0.75, 1.5, 1.0, 3.0),
        (1.5, 0.3, 1.0, 0.2, 5.0),
        (2.5, 0.9, 2.0, 1.0, 2.0),
        (0.5, 0.2, 0.8, 1.0, 9.0),
        (4.0, 0.6, 1.2, 0.5, 1.5),
        (2.0, 1.0, 1.0, 2.0, 6.0),
        (3.0, 0.45, 0.6, 0.1, 1.0),
        (1.2, 0.1, 1.1, 0.3, 3.3),
        (2.2, 0.55, 1.9, 1.1, 4.4),
    ]
    for p, alpha, beta, a, b in cases:
        ord = FracOrder(alpha, beta)
        f = fns.power(p)
        # t^(1-alpha) p t^(p-1) / G = target  =>  c^(p-alpha) = G target / p
        target = (b**p - a**p) / (ord.gamma_factor * (b**alpha - a**alpha) / alpha)
        c = (ord.gamma_factor * target / p) ** (1 / (p - alpha))
        out.append((f, ord, a, b, c))

    for alpha, beta, a, b in [(0.5, 0.5, 1.0, 4.0), (0.3, 2.0, 0.5, 3.0), (0.8, 1.0, 2.0, 2.5)]:
        f = ScalarFn(lambda t, a_=alpha: t**a_ / a_, lambda t, a_=alpha: t ** (a_ - 1), "t^a/a")
        out.append((f, FracOrder(alpha, beta), a, b, 0.5 * (a + b)))

    for f, alpha, beta, a, b in [
        (fns.exp_a(1.0), 0.5, 1.5, 0.5, 2.0),
        (fns.sin_a(1.0), 0.4, 0.7, 0.2, 1.4),
        (fns.exp_frac(0.6), 0.6, 1.0, 1.0, 3.0),
        (fns.cos_a(1.0), 0.9, 1.3, 0.5, 2.5),
        (fns.power(0.5), 0.7, 0.6, 1.0, 8.0),
    ]:
        out.append((f, FracOrder(alpha, beta), a, b, math.nan))
    return out


def check_rolle(tol: float = 1.0e-8) -> Check:
    worst = 0.0
    instances = rolle_instances()
    for f, ord, a, b, c in instances:
        try:
            w = rolle_witness(f, ord, a, b, tol=1.0e-10)
        except McalcError:
            return Check("Rolle witnesses", math.inf, tol, len(instances))
        off = 0.0 if math.isnan(c) else abs(w.c - c)
        worst = max(worst, w.gap, off if a < w.c < b else math.inf)
    return Check("Rolle witnesses (gap and location)", worst, tol, len(instances))


def check_mvt(tol: float = 1.0e-8) -> Check:
    worst = 0.0
    instances = mvt_instances()
    for f, ord, a, b, c in instances:
        try:
            w = mvt_witness(f, ord, a, b, tol=1.0e-10)
        except McalcError:
            return Check("MVT witnesses", math.inf, tol, len(instances))
        off = 0.0 if math.isnan(c) else abs(w.c - c)
        worst = max(worst, w.gap, off if a < w.c < b else math.inf)
    return Check("MVT witnesses (gap and location)", worst, tol, len(instances))


def check_extended_mvt() -> Check:
    f, g = fns.power(2.0), fns.power(3.0)
    worst = 0.0
    for alpha, beta in itertools.product(ALPHAS, BETAS):
        w = extended_mvt_witness(f, g, FracOrder(alpha, beta), 1.0, 2.0)
        worst = max(worst, w.gap, abs(w.c - 14.0 / 9.0))
    return Check("extended MVT witness is order independent", worst, 1.0e-8, 12)


def check_weight_cancellation() -> Check:
    worst, cases = 0.0, 0
    for ord, f, t in _grid():
        g = fns.exp_a(0.3)
        ratio = m_derivative_closed(f, ord, t) / m_derivative_closed(g, ord, t)
        worst = max(worst, scaled(ratio, f.derivative(t) / g.derivative(t)))
        cases += 1
    return Check("D f / D g = f' / g'", worst, 1.0e-13, cases)


def check_mvt_beta_independence() -> Check:
    worst = 0.0
    for f, ord, a, b, _ in mvt_instances():
        c1 = mvt_witness(f, ord, a, b).c
        c2 = mvt_witness(f, FracOrder(ord.alpha, ord.beta + 0.8), a, b).c
        worst = max(worst, abs(c1 - c2))
    return Check("MVT witness does not depend on beta", worst, 1.0e-8, 20)


# }}}


SUITES: dict[str, tuple[Callable[[], Check], ...]] = {
    "special": (check_ml_exp, check_ml_cosh, check_ml_truncation, check_gamma_recurrence),
    "operators": (
        check_limit_vs_closed,
        check_continuity,
        check_alternative_reduction,
        check_conformable_agreement,
        check_classical_reduction,
        check_higher_reduction,
        check_linearity,
        check_product_rule,
        check_quotient_rule,
        check_chain_rule,
    ),
    "integration": (
        check_ftc,
        check_inverse,
        check_integration_by_parts,
        check_inequalities,
        check_additivity,
        check_integral_linearity,
        check_substitution,
    ),
    "ode": (
        check_eigen_residual,
        check_perturbed_detected,
        check_linear_vs_eigen,
        check_linear_residual,
        check_classical_eigen,
        check_monotone,
    ),
    "theorems": (
        check_rolle,
        check_mvt,
        check_extended_mvt,
        check_weight_cancellation,
        check_mvt_beta_independence,
    ),
}


def run_suite(name: str) -> Iterator[Check]:
    """Run the named suite (or ``"all"``), yielding checks as they finish."""
    names = list(SUITES) if name == "all" else [name]
    for suite in names:
        for check in SUITES[suite]:
            yield check()
