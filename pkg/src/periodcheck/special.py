"""Exact constructors for the named series: w(x), Wu's unit, the logistic
function, li_0, the A-hat series, the binomial series b(z) and the mod-2 Spin
series f."""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache

from .series import BivariateSeries, ModPSeries, PolyB, TruncatedSeries, invert_comp, reduce_mod_p

T = TruncatedSeries


class NamedSeriesId(enum.Enum):
    W_P = "w"
    X_OF_W = "x-of-w"
    WU_UNIT = "wu-unit"
    LOGISTIC = "logistic"
    LI0 = "li0"
    TODD_INTEGRAND = "todd-integrand"
    A_HAT = "a-hat"
    A_HAT_2X = "a-hat-2x"
    B_SERIES = "b-series"
    SPIN_F = "spin-f"


def _exp_ax(a, order: int, var: str = "x") -> TruncatedSeries:
    """``exp(a x)`` to the given order."""
    return T.monomial(1, order, a, var).exp()


def w_series(p: int, order: int) -> TruncatedSeries:
    """``w(x) = (exp(p x) - 1) / p``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return (_exp_ax(p, order) - 1) / p


def x_of_w(p: int, order: int) -> TruncatedSeries:
    """Compositional inverse of :func:`w_series`, i.e. ``log(1 + p w) / p``, in the variable ``w``."""
    return invert_comp(w_series(p, order)).with_var("w")


def wu_unit(order: int, normalized: bool = False) -> TruncatedSeries:
    """Wu's unit ``-2x / (1 - exp(-2x))``.

    As written the constant term is -1. ``normalized=True``
    flips the overall sign so the constant term is +1; mod 2 the two agree.
    """
    denom = 1 - _exp_ax(-2, order + 1)
    unit = T.monomial(1, order + 1, -2) / denom
    return -unit if normalized else unit


def wu_unit_reciprocal(order: int) -> TruncatedSeries:
    """``(1 - exp(-2x)) / (-2x)``; its mod-2 image is ``sum x^(2^k - 1)``."""
    return ((1 - _exp_ax(-2, order + 1)) / -2).shift(-1)


def logistic(order: int) -> TruncatedSeries:
    """``L(x) = 1 / (1 + exp(-x))``."""
    return (1 + _exp_ax(-1, order)).reciprocal()


def li0_series(order: int) -> TruncatedSeries:
    """``li_0(x) = -1 / (1 - exp(-x))``, a Laurent series with residue -1."""
    if order < -1:
        raise ValueError("order must be >= -1")
    return -((1 - _exp_ax(-1, order + 2)).reciprocal())


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1
    b = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((math.comb(m + 1, k) * b[k] for k in range(m)), Fraction(0))
        b.append(-s / (m + 1))
    return tuple(b)


def bernoulli(n: int) -> Fraction:
    """B_n with ``x / (exp(x) - 1) = sum B_n x^n / n!`` (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= 3 and n % 2:
        return Fraction(0)
    return _bernoulli_table(n)[n]


def todd_integrand(order: int) -> TruncatedSeries:
    """``x / (exp(x) - 1)``."""
    return (_exp_ax(1, order + 1) - 1).shift(-1).reciprocal()


def a_hat(order: int) -> TruncatedSeries:
    """``(x/2) / sinh(x/2)``."""
    e = _exp_ax(Fraction(1, 2), order + 1)
    e_inv = _exp_ax(Fraction(-1, 2), order + 1)
    sinh_over_x = ((e - e_inv) / 2).shift(-1)  # sinh(x/2)/x
    return (sinh_over_x * 2).reciprocal()


def a_hat_2x(order: int, method: str = "sqrt") -> TruncatedSeries:
    """``A-hat(2x)``, either by substituting 2x or as ``sqrt(wu(x) * wu(-x))``."""
    if method == "substitute":
        return a_hat(order).subs_scale(2)
    if method == "sqrt":
        wu = wu_unit(order)
        return (wu * wu.subs_scale(-1)).sqrt()
    raise ValueError(f"unknown method {method!r}")


def b_binomial_series(order: int) -> list[PolyB]:
    """Coefficients of ``(1 - z)^b = sum_k (-1)^k binom(b, k) z^k`` for k = 0..order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return [PolyB.binom(k) * (-1) ** k for k in range(order + 1)]


def b_of(arg: BivariateSeries, order: int) -> BivariateSeries:
    """``b(arg)`` for a bivariate series ``arg`` without constant term."""
    cs = b_binomial_series(order)
    zero = PolyB()
    result = BivariateSeries({(0, 0): cs[0]}, order, zero)
    power = BivariateSeries({(0, 0): Fraction(1)}, order)
    for k in range(1, order + 1):
        power = power * arg
        result = result + BivariateSeries.from_dict({key: cs[k] * v for key, v in power.coeffs.items()}, order, zero)
    return result


def spin_f_inverse(order: int) -> ModPSeries:
    """``sum_{k>=0} x^(2^k - 1)`` over F_2."""
    if order < 1:
        raise ValueError("order must be >= 1")
    exps = []
    k = 0
    while 2**k - 1 <= order:
        exps.append(2**k - 1)
        k += 1
    return ModPSeries.from_exponents(2, exps, order)


def spin_f(order: int) -> ModPSeries:
    """The mod-2 series f with ``1/f = sum x^(2^k - 1)``."""
    return spin_f_inverse(order).reciprocal()


def named_series(name: NamedSeriesId | str, order: int, prime: int = 2):
    """Look up a series by id (or its CLI spelling)."""
    if isinstance(name, str):
        key = name.strip().lower().replace("_", "-")
        try:
            name = NamedSeriesId(key)
        except ValueError:
            name = NamedSeriesId[name.upper().replace("-", "_")]
    builders = {
        NamedSeriesId.W_P: lambda: w_series(prime, order),
        NamedSeriesId.X_OF_W: lambda: x_of_w(prime, order),
        NamedSeriesId.WU_UNIT: lambda: wu_unit(order),
        NamedSeriesId.LOGISTIC: lambda: logistic(order),
        NamedSeriesId.LI0: lambda: li0_series(order),
        NamedSeriesId.TODD_INTEGRAND: lambda: todd_integrand(order),
        NamedSeriesId.A_HAT: lambda: a_hat(order),
        NamedSeriesId.A_HAT_2X: lambda: a_hat_2x(order),
        NamedSeriesId.B_SERIES: lambda: b_binomial_series(order),
        NamedSeriesId.SPIN_F: lambda: spin_f(order),
    }
    return builders[name]()


def wu_lemma_series(order: int) -> TruncatedSeries:
    """``(exp(2x) - 1) / 2``, the p = 2 instance of :func:`w_series`."""
    return w_series(2, order)


def mod2(f: TruncatedSeries) -> ModPSeries:
    return reduce_mod_p(f, 2)
