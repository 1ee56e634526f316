"""Floating-point special functions: zeta, the tempered polylogarithm li_s and
its regularization, divided moments of ``1/(e^x - 1)``, and the Planck integrals.

Double precision throughout.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import scipy.constants
from scipy import integrate, optimize

from .report import FAIL, PASS, CheckReport
from .series import TruncatedSeries, first_difference
from .special import a_hat, bernoulli, todd_integrand

# kappa = k/h in Hz per Kelvin (SI-exact constants)
KAPPA = scipy.constants.k / scipy.constants.h
KAPPA_QUOTED = 2e11  # order-of-magnitude value sometimes quoted; not k/h
PLANCK_H = scipy.constants.h

_EM_N = 20
_EM_TERMS = 24
_EM_COEFFS = [float(bernoulli(2 * k)) / math.factorial(2 * k) for k in range(1, _EM_TERMS + 2)]


@dataclass
class MomentResult:
    value: float
    est_error: float
    method: str
    status: str = "ok"
    diagnostic: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"value": self.value, "est_error": self.est_error, "method": self.method, "status": self.status}
        if self.diagnostic:
            d["diagnostic"] = self.diagnostic
        return d


def _zeta_em(s: float) -> tuple[float, float]:
    n = _EM_N
    terms = [k ** (-s) for k in range(1, n)]
    terms.append(n ** (1 - s) / (s - 1))
    terms.append(0.5 * n ** (-s))
    rising = s  # s (s+1) ... (s+2k-2)
    npow = n ** (-s - 1)
    tail = 0.0
    for k in range(1, _EM_TERMS + 2):
        t = _EM_COEFFS[k - 1] * rising * npow
        if k == _EM_TERMS + 1:
            tail = abs(t)
            break
        terms.append(t)
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        npow /= n * n
    # truncation bound plus a few ulps of rounding in the summands
    return math.fsum(terms), tail + 4 * sys.float_info.epsilon * math.fsum(map(abs, terms))


def zeta_with_error(s: float) -> tuple[float, float]:
    """Riemann zeta by Euler-Maclaurin (reflected for s < 1/2), with a tail bound."""
    if s == 1:
        raise ValueError("zeta has a pole at s = 1")
    if s > 40:
        # direct sum; tail < 11^(1-s) / (s-1)
        return math.fsum(k ** (-s) for k in range(1, 11)), 11.0 ** (1 - s) / (s - 1) + sys.float_info.epsilon
    if s >= 0.5:
        return _zeta_em(s)
    if s == 0:
        return -0.5, 0.0
    if s < 0 and s == int(s) and int(s) % 2 == 0:
        return 0.0, 0.0
    z, err = _zeta_em(1 - s)
    factor = 2**s * math.pi ** (s - 1) * math.sin(math.pi * s / 2) * math.gamma(1 - s)
    return factor * z, abs(factor) * err


def zeta(s: float) -> float:
    return zeta_with_error(s)[0]


def gamma(s: float) -> float:
    if s <= 0 and s == int(s):
        raise ValueError(f"gamma has a pole at {s}")
    return math.gamma(s)


def zeta_even_exact(n: int) -> float:
    """``zeta(2n) = (-1)^(n+1) B_2n (2 pi)^2n / (2 (2n)!)`` from the exact Bernoulli number."""
    return float((-1) ** (n + 1) * bernoulli(2 * n) / (2 * math.factorial(2 * n))) * (2 * math.pi) ** (2 * n)


def gamma_plus(s: float, x: float) -> float:
    """``x_+^(s-1) / Gamma(s)``."""
    return x ** (s - 1) / gamma(s) if x > 0 else 0.0


def li_s_negative(s: float, x: float, with_error: bool = False):
    """``sum_{n>=1} e^(n x) n^-s`` for x < 0, summed until a geometric tail bound is below 1e-17."""
    if x >= 0:
        raise ValueError("x must be negative")
    r = math.exp(x)
    terms = []
    n = 1
    while True:
        t = math.exp(n * x) * n ** (-s)
        terms.append(t)
        ratio = r * ((n + 1) / n) ** max(-s, 0.0)
        if ratio < 1 and n > 2:
            bound = t * ratio / (1 - ratio)
            if bound <= 1e-17 * abs(math.fsum(terms[-8:])) or bound < 1e-300:
                break
        n += 1
        if n > 10**7:
            raise RuntimeError("series did not converge")
    value = math.fsum(terms)
    return (value, bound) if with_error else value


def _smooth_part(s: float, x: float) -> tuple[float, float]:
    """``sum_k zeta(s-k) x^k / k!`` for |x| < 2 pi."""
    terms = []
    lx = math.log(abs(x)) if x else None
    k = 0
    small = 0
    err = 0.0
    while k < 5000:
        sigma = s - k
        if k and x == 0:
            break
        if sigma >= 0.5:
            t = zeta(sigma) / math.factorial(k) * x**k
        else:
            # reflected zeta divided by k!, assembled in logs to avoid overflow
            sn = math.sin(math.pi * sigma / 2)
            if sn == 0:
                t = 0.0
            else:
                zr = zeta(1 - sigma)
                logmag = (
                    sigma * math.log(2) + (sigma - 1) * math.log(math.pi)
                    + math.lgamma(1 - sigma) - math.lgamma(k + 1)
                    + math.log(abs(zr)) + math.log(abs(sn))
                    + (k * lx if k else 0.0)
                )
                sign = math.copysign(1.0, sn * zr) * (1 if x > 0 or k % 2 == 0 else -1)
                t = sign * math.exp(logmag)
        terms.append(t)
        total = abs(math.fsum(terms))
        if k > 2 and abs(t) < 1e-18 * max(total, 1e-300):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        err = abs(t)
        k += 1
    ratio = abs(x) / (2 * math.pi)
    return math.fsum(terms), err * ratio / (1 - ratio) if ratio < 1 else math.inf


def li_s_regularized(s: float, x: float, with_error: bool = False):
    """Regularized tempered polylog ``li_s(x) + pi cot(pi s) gamma_+^s(x)``.

    For |x| < 2 pi it equals ``Gamma(1-s) x_-^(s-1) + sum_k zeta(s-k) x^k / k!``:
    the cotangent term removes the x_+ singularity of li_s entirely, while on
    x < 0 (where gamma_+^s vanishes) the value is the direct series. At x = 0
    the right-hand limit is returned.
    """
    if s == int(s):
        raise ValueError("s must not be an integer")
    if abs(x) >= 2 * math.pi:
        raise ValueError("|x| must be < 2 pi")
    val, err = _smooth_part(s, x)
    if x < 0:
        val += math.gamma(1 - s) * (-x) ** (s - 1)
    return (val, err) if with_error else val


def li_s(s: float, x: float) -> float:
    """Tempered polylog on the whole line (x != 0).

    x < 0: the direct series. x > 0: principal-value continuation
    ``-cos(pi s) Gamma(1-s) x^(s-1) + sum_k zeta(s-k) x^k/k!`` (|x| < 2 pi).
    """
    if x < 0:
        return li_s_negative(s, x)
    if x == 0:
        raise ValueError("li_s is singular at 0")
    return -math.cos(math.pi * s) * math.gamma(1 - s) * x ** (s - 1) + _smooth_part(s, x)[0]


def regularized_laurent_at_one(x: float, eps: float = 2.0**-16) -> tuple[float, float]:
    """Pole coefficient and finite part of the regularized polylog in powers of (1 - s).

    Symmetric differences at s = 1 +- eps cancel the first-order error; eps
    should be a power of two so both points are exact in binary.
    """
    up = li_s_regularized(1 + eps, x)
    down = li_s_regularized(1 - eps, x)
    pole = 0.5 * ((-eps) * up + eps * down)
    finite = 0.5 * (up + down)
    return pole, finite


def li1(x: float) -> float:
    """``li_1(x) = -log|1 - e^x|``."""
    if x == 0:
        raise ValueError("li_1 is singular at 0")
    return -math.log(abs(math.expm1(x)))


def li1_log_congruence(samples=None, tol: float = 1e-12) -> CheckReport:
    """li_1(x) + log|x| is smooth: it vanishes as x -> 0 and stays bounded on [-1, 1]."""
    if samples is None:
        samples = [sign * 10.0 ** (-k) for k in range(1, 9) for sign in (1, -1)] + [-1.0, -0.5, 0.5, 1.0]
    params = {"samples": len(samples), "tol": tol}
    for x in samples:
        r = li1(x) + math.log(abs(x))
        if abs(x) <= 1 and abs(r) > 1:
            return CheckReport("li1-log-congruence", params, FAIL, {"x": x, "remainder": r, "reason": "unbounded"})
        if abs(r) > abs(x):
            return CheckReport("li1-log-congruence", params, FAIL, {"x": x, "remainder": r, "reason": "not O(x)"})
        diff = li1(x) - li1(-x)
        if abs(diff + x) > tol * max(1.0, abs(x)):
            return CheckReport("li1-log-congruence", params, FAIL, {"x": x, "antisymmetry_error": diff + x})
    return CheckReport(
        "li1-log-congruence", params, PASS, None,
        "li1 + log|x| = O(x) near 0, bounded on [-1,1]; li1(x) - li1(-x) = -x",
    )


# -- moments -------------------------------------------------------------------


def _g(x: float) -> float:
    return x / math.expm1(x) if x else 1.0


def _cutoff_integral(s: float, delta: float) -> float:
    # x = e^y: int_delta^1 x^(s-2) g(x) dx = int_{log delta}^0 e^((s-1) y) g(e^y) dy
    val, _ = integrate.quad(
        lambda y: math.exp((s - 1) * y) * _g(math.exp(y)), math.log(delta), 0.0,
        epsabs=1e-13, epsrel=1e-13, limit=200,
    )
    return val / gamma(s)


def _divergence_scan(s: float) -> dict:
    deltas = [10.0 ** (-k) for k in range(2, 9)]
    values = [_cutoff_integral(s, d) for d in deltas]
    logs = [-math.log(d) for d in deltas]
    if s == 1:
        ys, kind, expected = values, "logarithmic", 1.0
    else:
        ys, kind, expected = [math.log(v) for v in values], "power", 1.0 - s
    n = len(logs)
    mx, my = sum(logs) / n, sum(ys) / n
    slope = sum((a - mx) * (b - my) for a, b in zip(logs, ys)) / sum((a - mx) ** 2 for a in logs)
    return {
        "kind": kind,
        "slope": slope,
        "expected_slope": expected,
        "cutoffs": deltas,
        "partial_integrals": values,
    }


def _tail_integrand(x: float, s: float) -> float:
    if x > 700:
        return math.exp((s - 1) * math.log(x) - x)
    return x ** (s - 1) / math.expm1(x)


def divided_moment(s: float, tol: float = 1e-10) -> MomentResult:
    """``int_0^inf x^(s-1) / (Gamma(s) (e^x - 1)) dx``, equal to zeta(s) for s > 1.

    [0, 1] uses algebraic-weight quadrature for the x^(s-2) endpoint factor;
    [1, inf) uses the infinite-interval rule. For s <= 1 the integral diverges
    and a lower-cutoff scan is returned instead.
    """
    if s <= 0:
        raise ValueError("s must be positive")
    if s <= 1:
        return MomentResult(math.nan, math.inf, "quadrature", "divergent", _divergence_scan(s))
    near, e1 = integrate.quad(_g, 0.0, 1.0, weight="alg", wvar=(s - 2, 0.0), epsabs=tol * 1e-2, epsrel=1e-13, limit=200)
    far, e2 = integrate.quad(_tail_integrand, 1.0, math.inf, args=(s,), epsabs=tol * 1e-2, epsrel=1e-13, limit=200)
    g = gamma(s)
    return MomentResult((near + far) / g, (e1 + e2) / g, "quadrature")


def planck_integral(power: int = 3, tol: float = 1e-10) -> MomentResult:
    """``int_0^inf eps^power / (e^eps - 1) d eps = Gamma(power+1) zeta(power+1)``."""
    m = divided_moment(power + 1, tol)
    g = math.gamma(power + 1)
    return MomentResult(m.value * g, m.est_error * g, m.method)


def planck_reduced(eps: float) -> float:
    """``12 gamma_+^4(eps) / (e^eps - 1) = 2 eps^3 / (e^eps - 1)``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return 12 * gamma_plus(4, eps) / math.expm1(eps)


def stefan_boltzmann(tol: float = 1e-10) -> MomentResult:
    """Total reduced radiance ``int 2 eps^3/(e^eps - 1) = 12 zeta(4)``; times h kappa^4 T^4."""
    m = planck_integral(3, tol)
    return MomentResult(
        2 * m.value, 2 * m.est_error, m.method, "ok",
        {
            "prefactor": "h * kappa^4 * T^4",
            "kappa_hz_per_k": KAPPA,
            "kappa_quoted": KAPPA_QUOTED,
            "closed_form": "12 zeta(4) = pi^4 / 7.5",
        },
    )


def wien_peak() -> float:
    """Maximiser of eps^3/(e^eps - 1): root of 3 (1 - e^-eps) = eps."""
    return optimize.brentq(lambda e: 3 * (-math.expm1(-e)) - e, 1.0, 5.0, xtol=1e-15)


def todd_integrand_check(order: int = 64, samples=None, tol: float = 1e-12) -> CheckReport:
    """``x/(e^x - 1) = e^(-x/2) A-hat(x)``, exactly as series and numerically."""
    if order < 4:
        raise ValueError("order must be >= 4")
    params = {"order": order, "tol": tol}
    lhs = todd_integrand(order)
    rhs = TruncatedSeries.monomial(1, order, Fraction(-1, 2)).exp() * a_hat(order)
    k = first_difference(lhs, rhs)
    if k is not None:
        return CheckReport("todd-integrand", params, FAIL, {"exponent": k, "lhs": lhs[k], "rhs": rhs[k]})
    if samples is None:
        samples = [-3.0 + 0.3 * i for i in range(21) if i != 10]
    for x in samples:
        a = x / math.expm1(x)
        b = math.exp(-x / 2) * (x / 2) / math.sinh(x / 2)
        if abs(a - b) > tol * max(1.0, abs(a)):
            return CheckReport("todd-integrand", params, FAIL, {"x": x, "error": a - b})
    return CheckReport("todd-integrand", params, PASS, None, "exact to order; numeric at sample points")
