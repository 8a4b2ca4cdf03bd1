from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcalc import functions as fns
from mcalc.errors import ContractError, DegenerateDenominatorError, DomainError, SearchFailure
from mcalc.operators import FracOrder, ScalarFn, m_derivative_closed
from mcalc.theorems import extended_mvt_witness, mvt_target, mvt_witness, rolle_witness


def frac_power(alpha: float) -> ScalarFn:
    return ScalarFn(lambda t: t**alpha / alpha, lambda t: t ** (alpha - 1.0), "t^a/a")


# {{{ Rolle


@pytest.mark.parametrize(("alpha", "beta"), [(0.2, 0.5), (0.5, 1.0), (0.9, 2.0), (1.0, 1.0)])
def test_rolle_parabola(alpha, beta):
    f = ScalarFn(lambda t: (t - 1) * (t - 3), lambda t: 2 * t - 4)
    w = rolle_witness(f, FracOrder(alpha, beta), 1.0, 3.0)
    assert w.c == pytest.approx(2.0, abs=1.0e-12)
    assert w.target_value == 0.0
    assert w.gap == abs(w.attained_value - w.target_value) <= 1.0e-10


def test_rolle_sine():
    w = rolle_witness(fns.sin_a(1.0), FracOrder(0.5, 1.0), math.pi / 4, 3 * math.pi / 4)
    assert w.c == pytest.approx(math.pi / 2, abs=1.0e-12)
    assert w.gap <= 1.0e-10


def test_rolle_constant_returns_midpoint():
    w = rolle_witness(fns.constant(2.0), FracOrder(0.3, 1.5), 1.0, 2.0)
    assert w.c == 1.5
    assert w.gap == 0.0


def test_rolle_requires_equal_endpoints():
    with pytest.raises(ContractError):
        rolle_witness(fns.power(2.0), FracOrder(0.5, 1.0), 1.0, 2.0)


def test_rolle_search_failure_reports_gap():
    # equal endpoint values, but the derivative only vanishes on a kink
    f = ScalarFn(lambda t: -abs(t - 1.5), lambda t: -1.0 if t > 1.5 else 1.0)
    with pytest.raises(SearchFailure) as info:
        rolle_witness(f, FracOrder(0.5, 1.0), 1.0, 2.0)
    assert info.value.min_gap > 0.5


@pytest.mark.parametrize(("a", "b"), [(0.0, 1.0), (2.0, 1.0), (1.0, math.inf)])
def test_interval_validation(a, b):
    with pytest.raises(DomainError):
        rolle_witness(fns.constant(1.0), FracOrder(0.5, 1.0), a, b)


# }}}


# {{{ mean value


def test_mvt_square():
    ord = FracOrder(0.5, 1.0)
    assert mvt_target(fns.power(2.0), ord, 1.0, 4.0) == pytest.approx(7.5, rel=1.0e-15)
    w = mvt_witness(fns.power(2.0), ord, 1.0, 4.0)
    assert w.c == pytest.approx(3.75 ** (2 / 3), abs=1.0e-12)
    assert w.c == pytest.approx(2.4137234615, abs=1.0e-10)


@pytest.mark.parametrize("beta", [0.4, 1.0, 2.3])
def test_mvt_fractional_power_target(beta):
    # D f is constant, and equals the target for every beta
    alpha = 0.6
    ord, f = FracOrder(alpha, beta), frac_power(alpha)
    target = mvt_target(f, ord, 0.5, 3.0)
    assert target == pytest.approx(1.0 / math.gamma(beta + 1), rel=1.0e-14)
    w = mvt_witness(f, ord, 0.5, 3.0)
    assert w.c == 1.75
    assert m_derivative_closed(f, ord, w.c) * math.gamma(beta + 1) == pytest.approx(1.0, rel=1.0e-14)


def test_target_without_gamma_factor_is_unattainable():
    # dropping Gamma(beta + 1) from the target leaves D f = 1/2 chasing 1
    ord, f = FracOrder(0.6, 2.0), frac_power(0.6)
    bare = mvt_target(f, ord, 0.5, 3.0) * ord.gamma_factor
    assert bare == pytest.approx(1.0, rel=1.0e-14)
    assert all(abs(m_derivative_closed(f, ord, c) - bare) >= 0.5 - 1.0e-14 for c in (0.6, 1.2, 2.9))


def test_mvt_constant():
    w = mvt_witness(fns.constant(-4.0), FracOrder(0.5, 0.5), 1.0, 2.0)
    assert w.target_value == 0.0 and w.gap == 0.0


@given(
    alpha=st.floats(min_value=0.1, max_value=1.0),
    beta=st.floats(min_value=0.3, max_value=2.5),
    a=st.floats(min_value=0.1, max_value=2.0),
    width=st.floats(min_value=0.1, max_value=3.0),
)
@settings(max_examples=60, deadline=None)
def test_mvt_witness_is_beta_independent(alpha, beta, a, width):
    f = fns.exp_a(0.8)
    c1 = mvt_witness(f, FracOrder(alpha, beta), a, a + width).c
    c2 = mvt_witness(f, FracOrder(alpha, 1.0), a, a + width).c
    assert a < c1 < a + width
    assert c1 == pytest.approx(c2, abs=1.0e-8)


def test_mvt_search_failure():
    # a jump breaks the hypotheses; no point attains the target
    f = ScalarFn(lambda t: 0.0 if t < 1.5 else 1.0, lambda t: 0.0)
    with pytest.raises(SearchFailure):
        mvt_witness(f, FracOrder(0.5, 1.0), 1.0, 2.0)


# }}}


# {{{ extended mean value


@pytest.mark.parametrize(("alpha", "beta"), [(0.25, 0.5), (0.5, 1.0), (1.0, 1.5)])
def test_extended_mvt_quadratic_over_cubic(alpha, beta):
    w = extended_mvt_witness(fns.power(2.0), fns.power(3.0), FracOrder(alpha, beta), 1.0, 2.0)
    assert w.target_value == pytest.approx(3.0 / 7.0, rel=1.0e-15)
    assert w.c == pytest.approx(14.0 / 9.0, abs=1.0e-12)


def test_extended_reduces_to_mvt():
    # with g = t^alpha / alpha the two targets differ by the constant D g
    ord = FracOrder(0.4, 1.3)
    f = fns.sin_a(1.0)
    ext = extended_mvt_witness(f, frac_power(0.4), ord, 0.5, 2.0)
    plain = mvt_witness(f, ord, 0.5, 2.0)
    assert ext.c == pytest.approx(plain.c, abs=1.0e-10)


def test_extended_same_function():
    w = extended_mvt_witness(fns.exp_a(1.0), fns.exp_a(1.0), FracOrder(0.5, 1.0), 1.0, 2.0)
    assert w.target_value == 1.0 and w.c == 1.5


def test_extended_degenerate_denominator():
    # g' changes sign inside (1, 3) while g(3) - g(1) != 0
    g = ScalarFn(lambda t: (t - 2.0) ** 2 + t, lambda t: 2.0 * (t - 2.0) + 1.0)
    with pytest.raises(DegenerateDenominatorError):
        extended_mvt_witness(fns.power(2.0), g, FracOrder(0.5, 1.0), 1.0, 3.0)


def test_extended_flat_denominator():
    with pytest.raises(ContractError):
        extended_mvt_witness(fns.power(2.0), fns.constant(1.0), FracOrder(0.5, 1.0), 1.0, 3.0)


# }}}
