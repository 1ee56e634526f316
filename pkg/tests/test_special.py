from __future__ import annotations

import math
from fractions import Fraction as F

import pytest

from periodcheck.series import first_difference, padic_profile, reduce_mod_p
from periodcheck.special import (
    a_hat,
    a_hat_2x,
    b_binomial_series,
    bernoulli,
    li0_series,
    logistic,
    named_series,
    spin_f,
    spin_f_inverse,
    todd_integrand,
    w_series,
    wu_unit,
    x_of_w,
)

# frozen from an independent symbolic expansion (sympy.series)
WU_COEFFS = [-1, -1, F(-1, 3), 0, F(1, 45), 0, F(-2, 945), 0, F(1, 4725), 0, F(-2, 93555)]
LI0_TIMES_X = [-1, F(-1, 2), F(-1, 12), 0, F(1, 720), 0, F(-1, 30240), 0, F(1, 1209600)]
AHAT_2X = [1, 0, F(-1, 6), 0, F(7, 360), 0, F(-31, 15120), 0, F(127, 604800), 0, F(-73, 3421440)]
TODD = [1, F(-1, 2), F(1, 12), 0, F(-1, 720), 0, F(1, 30240), 0, F(-1, 1209600)]
BERNOULLI_EVEN = {2: F(1, 6), 4: F(-1, 30), 6: F(1, 42), 12: F(-691, 2730), 20: F(-174611, 330)}


def test_w_series_coefficients():
    f = w_series(2, 8)
    assert f.coefficient_list(1, 5) == [1, 1, F(2, 3), F(1, 3), F(2, 15)]
    g = w_series(3, 4)
    assert g[3] == F(9, 6)


def test_w_series_profile_p3():
    prof = padic_profile(w_series(3, 27), 3)
    zeros = [k + 1 for k, v in enumerate(prof) if v == 0]
    assert min(prof) >= 0 and zeros == [1]


def test_x_of_w_is_the_log():
    assert x_of_w(2, 8).coefficient_list(1, 8) == [1, -1, F(4, 3), -2, F(16, 5), F(-16, 3), F(64, 7), -16]
    assert x_of_w(2, 8).var == "w"


def test_wu_unit_against_symbolic():
    assert wu_unit(10).coefficient_list(0, 10) == WU_COEFFS
    assert wu_unit(6, normalized=True)[0] == 1


def test_li0_laurent():
    assert li0_series(7).coefficient_list(-1, 7) == LI0_TIMES_X


def test_li0_is_bernoulli_with_positive_b1():
    f = li0_series(12)
    for n in range(13):
        bn = bernoulli(n) if n != 1 else -bernoulli(1)
        assert f[n - 1] == -bn / math.factorial(n)


def test_logistic_half_at_zero():
    lg = logistic(7)
    assert lg[0] == F(1, 2) and lg[1] == F(1, 4) and lg[2] == 0


def test_todd_and_ahat():
    assert todd_integrand(8).coefficient_list(0, 8) == TODD
    assert a_hat(6)[2] == F(-1, 24)


def test_ahat_2x_routes_agree():
    assert a_hat_2x(10).coefficient_list(0, 10) == AHAT_2X
    assert first_difference(a_hat_2x(20, "sqrt"), a_hat_2x(20, "substitute")) is None


def test_bernoulli_values():
    assert bernoulli(0) == 1 and bernoulli(1) == F(-1, 2)
    for n, b in BERNOULLI_EVEN.items():
        assert bernoulli(n) == b
    assert bernoulli(7) == 0


@pytest.mark.parametrize("n", [2, 4, 10, 16, 30])
def test_von_staudt_clausen(n):
    # B_n + sum_{(p-1)|n} 1/p is an integer
    primes = [p for p in range(2, n + 2) if all(p % d for d in range(2, p)) and n % (p - 1) == 0]
    assert (bernoulli(n) + sum(F(1, p) for p in primes)).denominator == 1


def test_b_series():
    cs = b_binomial_series(3)
    assert [c(4) for c in cs] == [1, -4, 6, -4]


def test_spin_f():
    assert spin_f_inverse(8).support() == [0, 1, 3, 7]
    f = spin_f(8)
    assert (f * spin_f_inverse(8)).support() == [0]
    assert f.support() == reduce_mod_p(wu_unit(8), 2).support()


def test_named_lookup():
    assert named_series("wu-unit", 4) == wu_unit(4)
    assert named_series("W_P", 4, 3) == w_series(3, 4)
    with pytest.raises(KeyError):
        named_series("nope", 4)
