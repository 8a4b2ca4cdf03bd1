r"""Test functions with analytic derivatives, and ways to combine them.

The named registry covers every closed-form row of the derivative tables:
powers, :math:`\sin`, :math:`\cos`, :math:`\exp`, and the "fractional"
arguments :math:`t^\alpha / \alpha`. Entries depending on the order are
built per :math:`\alpha` by :func:`make`.
"""

from __future__ import annotations

import math
from collections.abc import Callable

from mcalc.errors import DomainError
from mcalc.operators import ScalarFn

__all__ = [
    "FUNCTION_NAMES",
    "battery",
    "compose",
    "constant",
    "cos_a",
    "cos_frac",
    "exp_a",
    "exp_frac",
    "linear_combination",
    "make",
    "power",
    "product",
    "quotient",
    "sin_a",
    "sin_frac",
]


def constant(c: float) -> ScalarFn:
    c = float(c)
    return ScalarFn(lambda t: c, lambda t: 0.0, f"const({c:g})", (lambda t: 0.0,))


def power(a: float) -> ScalarFn:
    """:math:`t^a` with derivatives up to third order."""
    a = float(a)
    return ScalarFn(
        lambda t: t**a,
        lambda t: a * t ** (a - 1.0),
        f"t^{a:g}",
        (
            lambda t: a * (a - 1.0) * t ** (a - 2.0),
            lambda t: a * (a - 1.0) * (a - 2.0) * t ** (a - 3.0),
        ),
    )


def sin_a(a: float = 1.0) -> ScalarFn:
    a = float(a)
    return ScalarFn(
        lambda t: math.sin(a * t),
        lambda t: a * math.cos(a * t),
        f"sin({a:g}t)",
        (lambda t: -a * a * math.sin(a * t), lambda t: -(a**3) * math.cos(a * t)),
    )


def cos_a(a: float = 1.0) -> ScalarFn:
    a = float(a)
    return ScalarFn(
        lambda t: math.cos(a * t),
        lambda t: -a * math.sin(a * t),
        f"cos({a:g}t)",
        (lambda t: -a * a * math.cos(a * t), lambda t: a**3 * math.sin(a * t)),
    )


def exp_a(a: float = 1.0) -> ScalarFn:
    a = float(a)
    return ScalarFn(
        lambda t: math.exp(a * t),
        lambda t: a * math.exp(a * t),
        f"exp({a:g}t)",
        (lambda t: a * a * math.exp(a * t), lambda t: a**3 * math.exp(a * t)),
    )


def _frac_arg(alpha: float) -> Callable[[float], float]:
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1]: got {alpha}")
    return lambda t: t**alpha / alpha


def sin_frac(alpha: float) -> ScalarFn:
    r""":math:`\sin(t^\alpha / \alpha)`."""
    s = _frac_arg(alpha)
    return ScalarFn(
        lambda t: math.sin(s(t)),
        lambda t: math.cos(s(t)) * t ** (alpha - 1.0),
        f"sin(t^{alpha:g}/{alpha:g})",
    )


def cos_frac(alpha: float) -> ScalarFn:
    r""":math:`\cos(t^\alpha / \alpha)`."""
    s = _frac_arg(alpha)
    return ScalarFn(
        lambda t: math.cos(s(t)),
        lambda t: -math.sin(s(t)) * t ** (alpha - 1.0),
        f"cos(t^{alpha:g}/{alpha:g})",
    )


def exp_frac(alpha: float) -> ScalarFn:
    r""":math:`\exp(t^\alpha / \alpha)`."""
    s = _frac_arg(alpha)
    return ScalarFn(
        lambda t: math.exp(s(t)),
        lambda t: math.exp(s(t)) * t ** (alpha - 1.0),
        f"exp(t^{alpha:g}/{alpha:g})",
    )


# {{{ combinators


def _need_derivative(*fns: ScalarFn) -> None:
    for fn in fns:
        if fn.classical_derivative is None:
            raise DomainError(f"{fn.label!r} carries no classical derivative")


def linear_combination(a: float, f: ScalarFn, b: float, g: ScalarFn) -> ScalarFn:
    _need_derivative(f, g)
    df, dg = f.classical_derivative, g.classical_derivative
    return ScalarFn(
        lambda t: a * f(t) + b * g(t),
        lambda t: a * df(t) + b * dg(t),  # type: ignore[misc]
        f"{a:g}*{f.label}+{b:g}*{g.label}",
    )


def product(f: ScalarFn, g: ScalarFn) -> ScalarFn:
    _need_derivative(f, g)
    df, dg = f.classical_derivative, g.classical_derivative
    return ScalarFn(
        lambda t: f(t) * g(t),
        lambda t: df(t) * g(t) + f(t) * dg(t),  # type: ignore[misc]
        f"({f.label})*({g.label})",
    )


def quotient(f: ScalarFn, g: ScalarFn) -> ScalarFn:
    _need_derivative(f, g)
    df, dg = f.classical_derivative, g.classical_derivative
    return ScalarFn(
        lambda t: f(t) / g(t),
        lambda t: (df(t) * g(t) - f(t) * dg(t)) / g(t) ** 2,  # type: ignore[misc]
        f"({f.label})/({g.label})",
    )


def compose(f: ScalarFn, g: ScalarFn) -> ScalarFn:
    """``f(g(t))``."""
    _need_derivative(f, g)
    df, dg = f.classical_derivative, g.classical_derivative
    return ScalarFn(
        lambda t: f(g(t)),
        lambda t: df(g(t)) * dg(t),  # type: ignore[misc]
        f"{f.label}o{g.label}",
    )


# }}}


# {{{ registry

_FIXED: dict[str, Callable[[], ScalarFn]] = {
    "square": lambda: power(2.0),
    "cube": lambda: power(3.0),
    "sqrt": lambda: power(0.5),
    "sin": lambda: sin_a(1.0),
    "cos": lambda: cos_a(1.0),
    "exp": lambda: exp_a(1.0),
    "const1": lambda: constant(1.0),
}

_BY_ORDER: dict[str, Callable[[float], ScalarFn]] = {
    "sin_frac": sin_frac,
    "cos_frac": cos_frac,
    "exp_frac": exp_frac,
}

#: Names accepted by :func:`make` and by the command line.
FUNCTION_NAMES: tuple[str, ...] = (*_FIXED, *_BY_ORDER)


def make(name: str, alpha: float = 1.0) -> ScalarFn:
    """Build the registry function *name*; *alpha* is used by ``*_frac``."""
    if name in _FIXED:
        fn = _FIXED[name]()
    elif name in _BY_ORDER:
        fn = _BY_ORDER[name](alpha)
    else:
        raise DomainError(
            f"unknown function {name!r}; expected one of {', '.join(FUNCTION_NAMES)}"
        )

    return ScalarFn(fn.eval, fn.classical_derivative, name, fn.higher_derivatives)


def battery(alpha: float) -> list[ScalarFn]:
    r"""The ten smooth functions used to cross-check the two derivative routes.

    :math:`t^a` for :math:`a \in \{1/2, 1, 2, 3\}`, :math:`\sin t`,
    :math:`\cos t`, :math:`e^t`, and :math:`e^{s}, \sin s, \cos s` with
    :math:`s = t^\alpha / \alpha`.
    """
    return [
        power(0.5),
        power(1.0),
        power(2.0),
        power(3.0),
        sin_a(1.0),
        cos_a(1.0),
        exp_a(1.0),
        exp_frac(alpha),
        sin_frac(alpha),
        cos_frac(alpha),
    ]


# }}}
