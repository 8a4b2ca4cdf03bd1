"""Exit criteria of the library, one test per criterion.

Each test records its verdict through the ``criterion`` fixture, and the
terminal summary prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import csv
import itertools
import math
import time

import mpmath
import numpy as np
import pytest

from mcalc import functions as fns
from mcalc import verify
from mcalc.cli import main
from mcalc.integration import ftc_roundtrip, inverse_roundtrip
from mcalc.ode import (
    FIGURE_ALPHAS,
    eigen_problem,
    eigen_solution,
    residual,
    solve_eigen,
    solve_linear,
)
from mcalc.operators import (
    FracOrder,
    ScalarFn,
    alternative_derivative,
    m_derivative_closed,
    m_derivative_limit,
)
from mcalc.special_fn import mittag_leffler
from mcalc.theorems import mvt_witness, rolle_witness

pytestmark = pytest.mark.acceptance

ALPHAS = (0.25, 0.5, 0.75, 1.0)
BETAS = (0.5, 1.0, 1.5)
TS = (0.5, 1.0, 2.0, 4.0)


def scaled(x: float, ref: float) -> float:
    return abs(x - ref) / (1.0 + abs(ref))


def grid():
    for alpha, beta in itertools.product(ALPHAS, BETAS):
        ord = FracOrder(alpha, beta)
        for f in fns.battery(alpha):
            for t in TS:
                yield ord, f, t


@pytest.mark.criterion(1, "limit definition vs closed form, 480 cases")
def test_limit_matches_closed_form(criterion):
    start = time.perf_counter()
    worst, cases = 0.0, 0
    for ord, f, t in grid():
        # independent reference: weight times the supplied classical derivative
        exact = t ** (1 - ord.alpha) * f.classical_derivative(t) / float(mpmath.gamma(ord.beta + 1))
        worst = max(worst, abs(m_derivative_limit(f, ord, t) - exact) / abs(exact))
        cases += 1
    elapsed = time.perf_counter() - start

    ok = cases == 480 and worst <= 1.0e-6 and elapsed < 5.0
    criterion(ok, f"cases={cases} max_rel={worst:.2e} (tol 1e-6) time={elapsed:.2f}s (< 5s)")
    assert ok


@pytest.mark.criterion(2, "golden derivative formulas, nine rows")
def test_golden_formulas(criterion):
    alpha, beta, a = 0.6, 1.3, 1.7
    ord = FracOrder(alpha, beta)
    G = float(mpmath.gamma(beta + 1))
    s = lambda t: t**alpha / alpha  # noqa: E731

    rows = [
        (fns.constant(1.0), lambda t: 0.0),
        (fns.exp_a(a), lambda t: t ** (1 - alpha) / G * a * math.exp(a * t)),
        (fns.sin_a(a), lambda t: t ** (1 - alpha) / G * a * math.cos(a * t)),
        (fns.cos_a(a), lambda t: -(t ** (1 - alpha)) / G * a * math.sin(a * t)),
        (ScalarFn(lambda t: s(t), lambda t: t ** (alpha - 1)), lambda t: 1 / G),
        (fns.power(a), lambda t: a / G * t ** (a - alpha)),
        (fns.sin_frac(alpha), lambda t: math.cos(s(t)) / G),
        (fns.cos_frac(alpha), lambda t: -math.sin(s(t)) / G),
        (fns.exp_frac(alpha), lambda t: math.exp(s(t)) / G),
    ]

    worst, cases = 0.0, 0
    for f, formula in rows:
        for t in (0.3, 0.9, 1.7, 2.6, 4.2):
            got, want = m_derivative_closed(f, ord, t), formula(t)
            err = abs(got) if want == 0.0 else abs(got - want) / abs(want)
            worst = max(worst, err)
            cases += 1

    ok = cases == 45 and worst <= 1.0e-10
    criterion(ok, f"rows=9 points={cases} max_rel={worst:.2e} (tol 1e-10)")
    assert ok


@pytest.mark.criterion(3, "beta = 1 reduction and classical limit")
def test_alternative_and_classical_reduction(criterion):
    alt = 0.0
    for alpha in ALPHAS:
        ord = FracOrder(alpha, 1.0)
        for f in fns.battery(alpha):
            for t in TS:
                m = m_derivative_limit(f, ord, t)
                alt = max(alt, scaled(m, alternative_derivative(f, alpha, t)))

    classical = 0.0
    ord = FracOrder(1.0, 1.0)
    for f in fns.battery(1.0):
        for t in TS:
            classical = max(classical, scaled(m_derivative_limit(f, ord, t), f.classical_derivative(t)))

    ok = alt <= 1.0e-8 and classical <= 1.0e-8
    criterion(ok, f"alternative max={alt:.2e}, classical max={classical:.2e} (tol 1e-8)")
    assert ok


@pytest.mark.criterion(4, "algebraic rules on 200 random draws")
def test_algebraic_rules(criterion):
    checks = [
        verify.check_linearity(),
        verify.check_product_rule(),
        verify.check_quotient_rule(),
        verify.check_chain_rule(),
    ]
    ok = all(c.cases == 200 and c.max_residual <= 1.0e-7 for c in checks)
    detail = ", ".join(f"{c.name.split()[0]}={c.max_residual:.1e}" for c in checks)
    criterion(ok, f"seed={verify.seed_from_env()} {detail} (tol 1e-7)")
    assert ok


@pytest.mark.criterion(5, "fundamental theorem and inverse property, a = 0.5")
def test_ftc_and_inverse(criterion):
    ftc = inv = 0.0
    for ord, f, t in grid():
        if t <= 0.5:
            continue
        ftc = max(ftc, scaled(*ftc_roundtrip(f, ord, 0.5, t)))
        inv = max(inv, scaled(*inverse_roundtrip(f, ord, 0.5, t)))

    ok = ftc <= 1.0e-8 and inv <= 1.0e-6
    criterion(ok, f"I(Df) max={ftc:.2e} (tol 1e-8), D(If) max={inv:.2e} (tol 1e-6)")
    assert ok


@pytest.mark.criterion(6, "integration by parts on 50 random pairs")
def test_integration_by_parts(criterion):
    check = verify.check_integration_by_parts()
    ok = check.cases == 50 and check.max_residual <= 1.0e-8
    criterion(ok, f"max={check.max_residual:.2e} (tol 1e-8)")
    assert ok


@pytest.mark.criterion(7, "integral inequality chain on 1000 random draws")
def test_inequalities(criterion):
    check = verify.check_inequalities()
    ok = check.cases == 1000 and check.max_residual <= 1.0e-10
    criterion(ok, f"largest excess={check.max_residual:.2e} (slack 1e-10)")
    assert ok


@pytest.mark.criterion(8, "Mittag-Leffler identities")
def test_mittag_leffler_identities(criterion):
    e1 = max(
        abs(mittag_leffler(1.0, x) - math.exp(x)) / math.exp(abs(x))
        for x in np.linspace(-5.0, 5.0, 101)
    )
    e2 = max(
        abs(mittag_leffler(2.0, x) - math.cosh(math.sqrt(x)))
        for x in np.linspace(0.0, 10.0, 101)
    )
    ok = e1 <= 1.0e-12 and e2 <= 1.0e-10
    criterion(ok, f"E_1 max={e1:.2e} (tol 1e-12 e^|x|), E_2 max={e2:.2e} (tol 1e-10)")
    assert ok


@pytest.mark.criterion(9, "linear equation residuals and solver agreement")
def test_ode(criterion):
    ts = np.linspace(0.1, 5.0, 50)
    cases = [
        (lam, 20.0, FracOrder(alpha, beta))
        for beta, lam in ((0.5, 1.0), (1.0, 2.0), (1.5, 2.5))
        for alpha in FIGURE_ALPHAS
    ]
    cases += [(-1.5, 3.0, FracOrder(0.4, 0.8)), (0.3, -2.0, FracOrder(0.7, 1.1))]

    worst, smallest_wrong, agree = 0.0, math.inf, 0.0
    for lam, u0, ord in cases:
        u = eigen_solution(lam, u0, ord)
        problem = eigen_problem(lam, ord, 1.0, u(1.0))
        scale = 1.0 + max(abs(lam * u(t)) for t in ts)
        # analytic derivative, then finite differences of the values only
        for fn in (u, ScalarFn(u.eval)):
            worst = max(worst, residual(fn, problem, ts) / scale)

        wrong = ScalarFn(lambda t, u=u: u(t) * (1.0 + 0.01 * t))
        smallest_wrong = min(smallest_wrong, residual(wrong, problem, ts))

        sub = ts[ts >= 1.0]
        exact = solve_eigen(lam, u0, ord, sub)
        general = solve_linear(problem, sub)
        agree = max(agree, float(np.max(np.abs(general.us / exact.us - 1.0))))

    ok = worst <= 1.0e-6 and smallest_wrong > 1.0e-3 and agree <= 1.0e-9
    criterion(
        ok,
        f"residual max={worst:.2e} (tol 1e-6), perturbed min={smallest_wrong:.2e} (> 1e-3), "
        f"solver agreement={agree:.2e} (tol 1e-9)",
    )
    assert ok


@pytest.mark.criterion(10, "figure curve families")
def test_figures(criterion, tmp_path):
    params = {1: (0.5, 1.0, 20.0), 2: (1.0, 2.0, 20.0), 3: (1.5, 2.5, 20.0)}
    problems = []
    for which, (beta, lam, u0) in params.items():
        out = tmp_path / f"figure{which}.csv"
        if main(["figure", "--which", str(which), "--output", str(out)]) != 0:
            problems.append(f"figure {which}: nonzero exit")
            continue

        with out.open(newline="") as fh:
            rows = list(csv.reader(fh))
        header, data = rows[0], np.array(rows[1:], dtype=float)
        if header != ["t", *(f"u_alpha{a!r}" for a in FIGURE_ALPHAS)] or data.shape != (501, 6):
            problems.append(f"figure {which}: layout {header} {data.shape}")
            continue
        if data[0, 0] != 0.0 or np.any(data[0, 1:] != u0):
            problems.append(f"figure {which}: first row {data[0]}")
        if not np.all(np.diff(data[:, 1:], axis=0) > 0.0):
            problems.append(f"figure {which}: not increasing")

        # plot parameters: every column is u0 exp(lam G t^alpha / alpha)
        G = float(mpmath.gamma(beta + 1))
        for j, alpha in enumerate(FIGURE_ALPHAS, start=1):
            t = data[:, 0]
            want = u0 * np.exp(lam * G * t**alpha / alpha)
            if np.max(np.abs(data[:, j] / want - 1.0)) > 1.0e-12:
                problems.append(f"figure {which}: column alpha={alpha} off its parameters")

    ok = not problems
    criterion(ok, "3 parameter sets reproduced, u(0)=20, increasing" if ok else "; ".join(problems))
    assert ok


@pytest.mark.criterion(11, "Rolle and mean value witnesses, 20 instances each")
def test_witnesses(criterion):
    rolle_gap = mvt_gap = off = 0.0
    for finder, instances, key in (
        (rolle_witness, verify.rolle_instances(), "rolle"),
        (mvt_witness, verify.mvt_instances(), "mvt"),
    ):
        assert len(instances) == 20
        for f, ord, a, b, c in instances:
            w = finder(f, ord, a, b)
            assert a < w.c < b
            if key == "rolle":
                rolle_gap = max(rolle_gap, w.gap)
            else:
                mvt_gap = max(mvt_gap, w.gap)
            if not math.isnan(c):
                off = max(off, abs(w.c - c))

    # the hand-checkable cases
    sin_c = rolle_witness(fns.sin_a(1.0), FracOrder(0.5, 1.0), math.pi / 4, 3 * math.pi / 4).c
    sq_c = mvt_witness(fns.power(2.0), FracOrder(0.5, 1.0), 1.0, 4.0).c
    off = max(off, abs(sin_c - math.pi / 2), abs(sq_c - 3.75 ** (2 / 3)))

    ok = rolle_gap <= 1.0e-8 and mvt_gap <= 1.0e-8 and off <= 1.0e-8
    criterion(ok, f"Rolle gap={rolle_gap:.1e}, MVT gap={mvt_gap:.1e}, location error={off:.1e} (tol 1e-8)")
    assert ok
