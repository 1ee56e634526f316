from __future__ import annotations

from fractions import Fraction as F

import pytest

from periodcheck.series import (
    INF,
    BivariateSeries,
    ModPSeries,
    NonIntegralCoefficient,
    PolyB,
    PrecisionError,
    TruncatedSeries as T,
    VariableMismatch,
    compose,
    first_difference,
    invert_comp,
    padic_profile,
    reduce_mod_p,
    vp,
)


def test_vp_basic():
    assert vp(F(12), 2) == 2
    assert vp(F(1, 6), 3) == -1
    assert vp(F(5, 7), 2) == 0
    assert vp(0, 5) == INF
    with pytest.raises(ValueError):
        vp(3, 4)


def test_zero_series_valuation():
    z = T.zero(5)
    assert z.is_zero() and z.valuation == 6
    assert T.from_coeffs([0, 0, 3], 4).valuation == 2


def test_precision_error_past_order():
    f = T.from_coeffs([1, 2, 3], 2)
    assert f[2] == 3
    with pytest.raises(PrecisionError):
        f[3]


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        T.gen(3, "x") + T.gen(3, "w")


def test_geometric_reciprocal():
    f = (1 - T.gen(6)).reciprocal()
    assert f.coefficient_list() == [1] * 7


def test_product_order_tracks_valuation():
    a = T.monomial(2, 5)  # known through x^5
    b = T.from_coeffs([1, 1], 3)
    assert (a * b).order == 5  # min(2 + 3, 0 + 5)
    c = T.monomial(-1, 4) * T.from_coeffs([1, 1, 1], 6)
    assert c.valuation == -1 and c.order == 4


def test_exp_log_roundtrip():
    x = T.gen(10)
    assert first_difference((x.exp() - 1 + 1).log(), x) is None
    # exp(x): 1/k!
    assert x.exp()[7] == F(1, 5040)


def test_sqrt_of_square():
    f = T.from_coeffs([1, 3, -2, 5], 8)
    assert first_difference((f * f).sqrt(), f) is None
    with pytest.raises(ValueError):
        T.from_coeffs([2, 1], 4).sqrt()


def test_compose_and_inverse():
    # log(1 + 2w)/2 inverts (e^(2x) - 1)/2
    x = T.gen(12)
    w = ((x * 2).exp() - 1) / 2
    inv = invert_comp(w)
    assert inv.coefficient_list(1, 8) == [1, -1, F(4, 3), -2, F(16, 5), F(-16, 3), F(64, 7), -16]
    assert first_difference(compose(inv, w), x) is None


def test_compose_polynomial_outer_allows_constant_inner():
    g = T.from_coeffs([1, 1], 4)
    assert compose([0, 0, 1], g).coefficient_list() == [1, 2, 1, 0, 0]


def test_integral_rejects_residue():
    with pytest.raises(ValueError):
        T.monomial(-1, 3).integral()


def test_json_roundtrip():
    f = T.from_coeffs([F(-1, 2), 0, F(3, 7)], 5, -1, "u")
    assert T.from_json(f.to_json()) == f
    assert f.to_dict()["coeffs"][0] == "-1/2"


def test_padic_profile_and_reduction():
    f = T.from_coeffs([F(1, 2), 4, F(3, 2)], 2)
    assert padic_profile(f, 2) == [-1, 2, -1]
    with pytest.raises(NonIntegralCoefficient) as info:
        reduce_mod_p(f, 2)
    assert info.value.exponent == 0
    g = reduce_mod_p(T.from_coeffs([F(1, 3), 2, 5], 2), 2)
    assert g.support() == [0, 2]


def test_mod_p_reciprocal():
    f = ModPSeries.from_exponents(2, [0, 1, 3, 7], 20)
    one = f * f.reciprocal()
    assert one.support() == [0]


def test_polyb_binomial():
    assert PolyB.binom(2)(5) == 10
    assert PolyB.binom(3)(-1) == -1
    assert str(PolyB((0, -1, 1))) == "-1*b + 1*b^2"


def test_bivariate_truncation():
    a = BivariateSeries({(1, 0): F(1), (0, 1): F(1)}, 3)
    sq = a * a
    assert sq[(1, 1)] == 2
    with pytest.raises(PrecisionError):
        sq[(2, 2)]
