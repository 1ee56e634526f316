from __future__ import annotations

import math

import mpmath
import pytest

from periodcheck import polylog as pl

# mpmath (30 digits), frozen
MP_ZETA = {0.5: -1.4603545088095868, 3: 1.2020569031595942, -3.5: 0.004441011335479432, 1.5: 2.612375348685488, -1: -1 / 12, 0.25: -0.8132784052618917}
MP_POLYLOG_NEG = {(0.5, -1.0): 0.5060301198729361, (2.5, -0.1): 1.1477157068692658, (1.5, -2.0): 0.14233433763743576, (0.25, -0.5): 1.3130183125738601}
WIEN = 2.8214393721220789
EULER_GAMMA = 0.5772156649015329


@pytest.mark.parametrize("s", sorted(MP_ZETA))
def test_zeta_against_mpmath(s):
    val, err = pl.zeta_with_error(s)
    assert val == pytest.approx(MP_ZETA[s], rel=1e-13, abs=1e-15)
    assert err < 1e-12


def test_zeta_special_points():
    assert pl.zeta(0) == -0.5
    assert pl.zeta(-4) == 0.0
    assert pl.zeta(60) == pytest.approx(1.0, abs=1e-17)
    with pytest.raises(ValueError):
        pl.zeta(1)


@pytest.mark.parametrize("n", range(1, 8))
def test_zeta_even_closed_form(n):
    assert pl.zeta(2 * n) == pytest.approx(pl.zeta_even_exact(n), rel=1e-13)


def test_zeta_two():
    assert pl.zeta_even_exact(1) == pytest.approx(math.pi**2 / 6, rel=1e-15)


@pytest.mark.parametrize("key", sorted(MP_POLYLOG_NEG))
def test_direct_series(key):
    s, x = key
    assert pl.li_s_negative(s, x) == pytest.approx(MP_POLYLOG_NEG[key], rel=1e-13)


@pytest.mark.parametrize("key", sorted(MP_POLYLOG_NEG))
def test_regularized_equals_direct_on_negative_axis(key):
    s, x = key
    assert pl.li_s_regularized(s, x) == pytest.approx(MP_POLYLOG_NEG[key], rel=1e-12)


@pytest.mark.parametrize("s", [0.25, 0.5, 1.5, 2.5])
@pytest.mark.parametrize("x", [0.3, 1.0, 2.0])
def test_principal_value_on_positive_axis(s, x):
    with mpmath.workdps(30):
        ref = float(mpmath.re(mpmath.polylog(s, mpmath.exp(x))))
    assert pl.li_s(s, x) == pytest.approx(ref, rel=1e-12)


def test_regularized_is_li_plus_cotangent_term():
    s, x = 0.5, 0.7
    cot = math.cos(math.pi * s) / math.sin(math.pi * s)
    assert pl.li_s_regularized(s, x) == pytest.approx(pl.li_s(s, x) + math.pi * cot * pl.gamma_plus(s, x), rel=1e-12)


def test_regularized_rejects_integers_and_large_x():
    with pytest.raises(ValueError):
        pl.li_s_regularized(2.0, -0.5)
    with pytest.raises(ValueError):
        pl.li_s_regularized(0.5, 7.0)


@pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
def test_laurent_at_one(x):
    pole, finite = pl.regularized_laurent_at_one(x)
    assert pole == pytest.approx(-1.0, abs=1e-9)
    assert finite - math.log(abs(x / math.expm1(x))) == pytest.approx(EULER_GAMMA, abs=1e-8)


def test_li1_closed_form():
    assert pl.li1(-1.0) == pytest.approx(-math.log(1 - math.exp(-1)))
    assert pl.li1_log_congruence().status == "pass"


@pytest.mark.parametrize("s", [1.5, 2, 3, 4, 6])
def test_divided_moments_are_zeta(s):
    m = pl.divided_moment(s)
    assert m.status == "ok"
    assert m.value == pytest.approx(float(mpmath.zeta(s)), abs=1e-10)
    assert m.est_error < 1e-8


@pytest.mark.parametrize("s,slope", [(1.0, 1.0), (0.5, 0.5)])
def test_divergence_scan(s, slope):
    m = pl.divided_moment(s)
    assert m.status == "divergent" and math.isnan(m.value)
    assert m.diagnostic["slope"] == pytest.approx(slope, rel=0.05)


def test_planck():
    assert pl.planck_integral(3).value == pytest.approx(math.pi**4 / 15, abs=1e-12)
    assert pl.stefan_boltzmann().value == pytest.approx(math.pi**4 / 7.5, abs=1e-11)
    assert pl.planck_reduced(1.0) == pytest.approx(2 / math.expm1(1.0))
    assert pl.wien_peak() == pytest.approx(WIEN, abs=1e-12)


def test_kappa():
    assert pl.KAPPA == pytest.approx(2.083661912e10, rel=1e-9)


def test_todd_integrand():
    assert pl.todd_integrand_check(32).status == "pass"
