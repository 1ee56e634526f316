"""Algebraic invariants checked on random inputs."""

from __future__ import annotations

from hypothesis import given, settings, strategies as st

from periodcheck.punctured import PRF, MobiusElement, expand_at, mobius_apply
from periodcheck.series import ModPSeries, TruncatedSeries as T, compose, first_difference, invert_comp, reduce_mod_p, vp
from periodcheck.special import bernoulli
from periodcheck.tate import BinomBasisPoly, basis_convert, boundary

ORDER = 8
small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
ints = st.integers(-6, 6)
primes = st.sampled_from([2, 3, 5, 7])


@st.composite
def series(draw, valuation=0, order=ORDER):
    cs = draw(st.lists(small, min_size=order - valuation + 1, max_size=order - valuation + 1))
    return T.from_coeffs(cs, order, valuation)


@st.composite
def units(draw):
    f = draw(series())
    c = draw(small.filter(lambda c: c != 0))
    return f + (c - f[0])


@st.composite
def prfs(draw):
    f = PRF.const(0)
    for _ in range(draw(st.integers(1, 3))):
        f = f + PRF.monomial(draw(st.integers(-2, 2)), draw(st.integers(-2, 2)), draw(ints))
    return f


def same(a, b):
    return first_difference(a, b) is None


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert same(a * (b + c), a * b + a * c)
    assert same((a * b) * c, a * (b * c))
    assert same(a + b - b, a)


@given(units())
def test_reciprocal(u):
    assert same(u * u.reciprocal(), T.one(ORDER))


@given(series(valuation=1))
def test_exp_log_inverse(f):
    assert same(f.exp().log(), f)


@given(series(), series())
def test_leibniz(a, b):
    assert same((a * b).derivative(), a.derivative() * b + a * b.derivative())


@given(series(valuation=1), series(valuation=1), series())
def test_compose_associative(f, g, h):
    assert same(compose(h, compose(f, g)), compose(compose(h, f), g))


@given(series(valuation=1).filter(lambda f: f[1] != 0))
@settings(max_examples=40)
def test_lagrange_inverse(f):
    g = invert_comp(f)
    x = T.gen(ORDER)
    assert same(compose(f, g), x) and same(compose(g, f), x)


@given(small.filter(bool), small.filter(bool), primes)
def test_valuation_multiplicative(a, b, p):
    assert vp(a * b, p) == vp(a, p) + vp(b, p)
    assert vp(a + b, p) >= min(vp(a, p), vp(b, p))


@given(st.lists(st.integers(-9, 9), min_size=9, max_size=9), st.lists(st.integers(-9, 9), min_size=9, max_size=9), primes)
def test_reduction_is_a_ring_map(a, b, p):
    fa, fb = T.from_coeffs(a, ORDER), T.from_coeffs(b, ORDER)
    assert same(reduce_mod_p(fa * fb, p), reduce_mod_p(fa, p) * reduce_mod_p(fb, p))
    assert same(reduce_mod_p(fa + fb, p), reduce_mod_p(fa, p) + reduce_mod_p(fb, p))


@given(st.lists(st.integers(0, 1), min_size=12, max_size=12))
def test_frobenius_mod_2(cs):
    f = ModPSeries(2, 0, tuple(cs), 11)
    sq = f * f
    assert sq.support() == [2 * k for k in f.support() if 2 * k <= sq.order]


@given(st.integers(1, 40))
def test_bernoulli_odd_vanish(n):
    if n % 2 and n > 1:
        assert bernoulli(n) == 0
    else:
        assert bernoulli(n) != 0


@given(prfs(), prfs())
def test_prf_field_laws(f, g):
    assert (f + g) - g == f
    assert f * g == g * f


@given(prfs(), st.integers(-3, 3), st.integers(-3, 3), st.sampled_from([1, -1]))
def test_division_by_units(f, i, j, sign):
    # the units of Z[x, 1/x, 1/(1-x)] are +-x^i (1-x)^j
    u = PRF.monomial(i, j, sign)
    assert (f * u) / u == f
    assert u * u.inverse() == PRF.const(1)


@given(prfs(), st.sampled_from(list(MobiusElement)), st.sampled_from(list(MobiusElement)))
def test_mobius_left_action(f, g, h):
    assert mobius_apply(g @ h, f) == mobius_apply(g, mobius_apply(h, f))
    assert mobius_apply(MobiusElement.IDENTITY, f) == f


@given(prfs(), prfs())
@settings(max_examples=40)
def test_expansion_is_multiplicative(f, g):
    for pt in (0, 1):
        a, b = expand_at(f, pt, 6), expand_at(g, pt, 6)
        prod = expand_at(f * g, pt, 6)
        ab = a * b
        n = min(prod.order, ab.order)
        assert same(prod.truncate(n), ab.truncate(n))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_binomial_basis_is_integer_valued(poly):
    b = basis_convert(poly)
    for m in range(6):
        assert b(m) == sum(c * m**k for k, c in enumerate(poly))


@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6), st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_boundary_linear(a, b):
    fa, fb = T.from_coeffs(a, 2, -3, "q"), T.from_coeffs(b, 2, -3, "q")
    assert boundary(fa + fb) == boundary(fa) + boundary(fb)
    assert isinstance(boundary(fa), BinomBasisPoly)
