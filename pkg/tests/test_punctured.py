from __future__ import annotations

import math
from fractions import Fraction as F

import mpmath
import pytest

from periodcheck.punctured import (
    PRF,
    ExprSyntaxError,
    MobiusElement as M,
    NotInvertible,
    PoleOutsidePunctures,
    c_h_involution_check,
    chart_c,
    chart_h,
    expand_at,
    h_of_c,
    log_spaced,
    mobius_apply,
    parse_expr,
)
from periodcheck.series import first_difference
from periodcheck.special import bernoulli, li0_series


def test_parse_and_normal_form():
    assert parse_expr("1/(1-x)") == PRF.monomial(0, -1)
    assert parse_expr("x^2/((1-x)*x)") == PRF.monomial(1, -1)
    assert parse_expr("x^-2 * x^3") == PRF.x()
    assert parse_expr("-(1-x)^2") == PRF.monomial(0, 2, -1)
    assert parse_expr("x*(1-x)/(x*(1-x))") == PRF.const(1)


def test_parse_errors():
    with pytest.raises(PoleOutsidePunctures):
        parse_expr("1/(2-x)")
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("x + * 2")
    assert info.value.offset == 4
    with pytest.raises(NotInvertible):
        PRF.const(2).inverse()


def test_evaluation_matches_closed_form():
    f = parse_expr("(x^2 + 3)/(x*(1-x)^2)")
    assert f(F(1, 3)) == (F(1, 9) + 3) / (F(1, 3) * F(4, 9))


def test_orders_at_punctures():
    f = PRF.monomial(-2, 3)
    assert f.order_at(0) == -2 and f.order_at(1) == 3 and f.order_at(math.inf) == -1


def test_expansion_identities():
    assert expand_at(PRF.monomial(0, -1), 0, 10).coefficient_list() == [1] * 11
    at1 = expand_at(PRF.monomial(-1), 1, 10)
    assert at1.var == "u" and at1.coefficient_list() == [1] * 11
    at_inf = expand_at(PRF.monomial(0, -1), math.inf, 6)
    # 1/(1 - 1/t) = -t/(1 - t)
    assert at_inf.coefficient_list(1, 6) == [-1] * 6


def test_expansion_with_poles_keeps_requested_order():
    f = PRF.monomial(-3, -2)
    g = expand_at(f, 0, 5)
    assert g.valuation == -3 and g.order == 5
    assert g[5] == 9  # coefficient of x^8 in 1/(1-x)^2


def test_chart_c_of_inverse_is_li0_up_to_sign():
    # 1/(1 - e^-c) = -li0(c)
    got = chart_c(PRF.monomial(-1), 10)
    assert first_difference(got, (-li0_series(10)).with_var("c")) is None
    assert got[1] == bernoulli(2) / 2


def test_chart_h_of_x():
    got = chart_h(PRF.x(), 6)
    assert got.coefficient_list() == [F((-1) ** k, math.factorial(k)) for k in range(7)]


def test_mobius_group_table():
    for g in M:
        assert g @ g.inverse() is M.IDENTITY
    assert M.ONE_MINUS_X @ M.INVERSE is M.X_MINUS_ONE_OVER_X


def test_mobius_moves_poles():
    f = PRF.monomial(-1)  # pole at 0
    moved = mobius_apply(M.ONE_MINUS_X, f)
    assert moved.order_at(1) == -1 and moved.order_at(0) == 0


def test_mobius_left_action_on_example():
    f = parse_expr("x^2/(1-x) + 3*x^-1")
    for g in M:
        for h in M:
            assert mobius_apply(g @ h, f) == mobius_apply(g, mobius_apply(h, f))


def test_h_of_c_fixed_point_and_involution():
    with mpmath.workdps(40):
        assert abs(h_of_c(mpmath.log(2)) - mpmath.log(2)) < mpmath.mpf(10) ** -35
        assert abs(h_of_c(h_of_c(1000)) - 1000) < 1e-20
    assert c_h_involution_check(log_spaced(1e-3, 1e3, 20)).status == "pass"


def test_log_spaced_endpoints():
    xs = log_spaced(1e-3, 1e3, 7)
    assert xs[0] == pytest.approx(1e-3) and xs[3] == pytest.approx(1.0) and xs[-1] == pytest.approx(1e3)
