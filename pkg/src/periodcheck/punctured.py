"""Functions on the projective line punctured at 0, 1 and infinity.

Elements of Z[x, 1/x, 1/(1-x)] are stored as ``P(x) / (x^m (1-x)^n)`` with
``P`` an integer polynomial and common factors cancelled, so equality is
structural.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .report import FAIL, PASS, CheckReport
from .series import TruncatedSeries, compose

Poly = tuple  # integer coefficients, lowest degree first


class NotInvertible(ArithmeticError):
    pass


class PoleOutsidePunctures(NotInvertible):
    """Division would create a pole away from {0, 1, inf}."""


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# -- integer polynomials --------------------------------------------------------


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _ppow(a: Poly, k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = _pmul(out, a)
    return out


_ONE_MINUS_X: Poly = (1, -1)


def _div_one_minus_x(p: Poly) -> Poly:
    """Exact quotient by (1 - x); caller guarantees p(1) == 0."""
    # synthetic division by (x - 1), then negate
    q = [0] * (len(p) - 1)
    carry = 0
    for i in range(len(p) - 1, 0, -1):
        carry = p[i] + carry
        q[i - 1] = carry
    return _trim(-c for c in q)


def _peval(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# -- ring elements --------------------------------------------------------------


@dataclass(frozen=True)
class PuncturedRationalFunction:
    numerator: Poly
    pole_at_0: int = 0
    pole_at_1: int = 0

    def __post_init__(self):
        p = _trim(int(c) for c in self.numerator)
        m, n = self.pole_at_0, self.pole_at_1
        if m < 0 or n < 0:
            raise ValueError("pole orders must be nonnegative")
        if not p:
            m = n = 0
        while m > 0 and p[0] == 0:
            p = p[1:]
            m -= 1
        while n > 0 and sum(p) == 0:
            p = _div_one_minus_x(p)
            n -= 1
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "pole_at_0", m)
        object.__setattr__(self, "pole_at_1", n)

    # constructors
    @classmethod
    def const(cls, c: int) -> PuncturedRationalFunction:
        return cls((c,))

    @classmethod
    def x(cls) -> PuncturedRationalFunction:
        return cls((0, 1))

    @classmethod
    def one_minus_x(cls) -> PuncturedRationalFunction:
        return cls(_ONE_MINUS_X)

    @classmethod
    def monomial(cls, i: int, j: int = 0, c: int = 1) -> PuncturedRationalFunction:
        """``c * x^i * (1-x)^j`` for any integers i, j."""
        num = _pmul((0,) * max(i, 0) + (c,), _ppow(_ONE_MINUS_X, max(j, 0)))
        return cls(num, max(-i, 0), max(-j, 0))

    def is_zero(self) -> bool:
        return not self.numerator

    # arithmetic
    def _lift(self, m: int, n: int) -> Poly:
        return _pmul(
            _pmul(self.numerator, (0,) * (m - self.pole_at_0) + (1,)),
            _ppow(_ONE_MINUS_X, n - self.pole_at_1),
        )

    def __add__(self, other):
        other = _as_prf(other)
        if other is NotImplemented:
            return NotImplemented
        m = max(self.pole_at_0, other.pole_at_0)
        n = max(self.pole_at_1, other.pole_at_1)
        return PuncturedRationalFunction(_padd(self._lift(m, n), other._lift(m, n)), m, n)

    __radd__ = __add__

    def __neg__(self):
        return PuncturedRationalFunction(tuple(-c for c in self.numerator), self.pole_at_0, self.pole_at_1)

    def __sub__(self, other):
        other = _as_prf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_prf(other)
        if other is NotImplemented:
            return NotImplemented
        return PuncturedRationalFunction(
            _pmul(self.numerator, other.numerator),
            self.pole_at_0 + other.pole_at_0,
            self.pole_at_1 + other.pole_at_1,
        )

    __rmul__ = __mul__

    def inverse(self) -> PuncturedRationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("division by the zero function")
        p = self.numerator
        i = 0
        while p[0] == 0:
            p = p[1:]
            i += 1
        j = 0
        while sum(p) == 0:
            p = _div_one_minus_x(p)
            j += 1
        if len(p) > 1:
            raise PoleOutsidePunctures(f"numerator factor {list(p)} vanishes away from 0 and 1")
        c = p[0]
        if c not in (1, -1):
            raise NotInvertible(f"{c} is not a unit over the integers")
        return PuncturedRationalFunction.monomial(self.pole_at_0 - i, self.pole_at_1 - j, c)

    def __truediv__(self, other):
        other = _as_prf(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_prf(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = PuncturedRationalFunction.const(1)
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, s: PuncturedRationalFunction) -> PuncturedRationalFunction:
        """``f(s(x))``; ``s`` and ``1 - s`` must be units of the ring."""
        acc = PuncturedRationalFunction.const(0)
        for c in reversed(self.numerator):
            acc = acc * s + c
        return acc * s ** (-self.pole_at_0) * (1 - s) ** (-self.pole_at_1)

    # analysis
    def order_at(self, point) -> int:
        """Order of vanishing (negative for a pole) at 0, 1 or ``math.inf``."""
        if self.is_zero():
            return math.inf
        p = self.numerator
        if point == 0:
            v = next(i for i, c in enumerate(p) if c)
            return v - self.pole_at_0
        if point == 1:
            v = 0
            while sum(p) == 0:
                p = _div_one_minus_x(p)
                v += 1
            return v - self.pole_at_1
        if point == math.inf:
            return self.pole_at_0 + self.pole_at_1 - (len(p) - 1)
        raise ValueError(f"{point!r} is not one of the punctures")

    def __call__(self, x):
        """Exact (Fraction) or float evaluation."""
        if isinstance(x, int):
            x = Fraction(x)
        return _peval(self.numerator, x) / (x**self.pole_at_0 * (1 - x) ** self.pole_at_1)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.numerator):
            if c:
                mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
                terms.append(f"{c}{'*' + mono if mono else ''}")
        num = " + ".join(terms) or "0"
        den = []
        if self.pole_at_0:
            den.append("x" if self.pole_at_0 == 1 else f"x^{self.pole_at_0}")
        if self.pole_at_1:
            den.append("(1-x)" if self.pole_at_1 == 1 else f"(1-x)^{self.pole_at_1}")
        return f"({num})" + (f"/({'*'.join(den)})" if den else "")


def _as_prf(v):
    if isinstance(v, PuncturedRationalFunction):
        return v
    if isinstance(v, int):
        return PuncturedRationalFunction.const(v)
    return NotImplemented


PRF = PuncturedRationalFunction


def prf_arith(a: PRF, b: PRF, op: str) -> PRF:
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    return ops[op](b)


# -- the S3 of Moebius transformations permuting {0, 1, inf} ------------------


_INF = math.inf
_POINTS = (0, 1, _INF)


class MobiusElement(enum.Enum):
    # value: images of (0, 1, inf)
    IDENTITY = (0, 1, _INF)
    ONE_MINUS_X = (1, 0, _INF)
    INVERSE = (_INF, 1, 0)
    ONE_OVER_ONE_MINUS_X = (1, _INF, 0)
    X_OVER_X_MINUS_ONE = (0, _INF, 1)
    X_MINUS_ONE_OVER_X = (_INF, 0, 1)

    @property
    def function(self) -> PRF:
        return {
            MobiusElement.IDENTITY: PRF.x(),
            MobiusElement.ONE_MINUS_X: PRF.one_minus_x(),
            MobiusElement.INVERSE: PRF.monomial(-1),
            MobiusElement.ONE_OVER_ONE_MINUS_X: PRF.monomial(0, -1),
            MobiusElement.X_OVER_X_MINUS_ONE: PRF.monomial(1, -1, -1),
            MobiusElement.X_MINUS_ONE_OVER_X: PRF.monomial(-1, 1, -1),
        }[self]

    def image(self, point):
        return self.value[_POINTS.index(point)]

    def __matmul__(self, other: MobiusElement) -> MobiusElement:
        """Composition ``self o other``."""
        return MobiusElement(tuple(self.image(other.image(pt)) for pt in _POINTS))

    def inverse(self) -> MobiusElement:
        return MobiusElement(tuple(_POINTS[self.value.index(pt)] for pt in _POINTS))


def mobius_apply(g: MobiusElement, f: PRF) -> PRF:
    """Push ``f`` forward along ``g``: the result is ``f o g^-1``.

    This is a left action, ``apply(g @ h, f) == apply(g, apply(h, f))``, and a
    zero or pole of ``f`` at a puncture P moves to ``g(P)``.
    """
    return f.substitute(g.inverse().function)


# -- local expansions ------------------------------------------------------------


def _substitute_series(f: PRF, s: TruncatedSeries) -> TruncatedSeries:
    acc = TruncatedSeries.zero(s.order, s.var)
    for c in reversed(f.numerator):
        acc = acc * s + c
    if f.pole_at_0:
        acc = acc * s ** (-f.pole_at_0)
    if f.pole_at_1:
        acc = acc * (1 - s) ** (-f.pole_at_1)
    return acc


def _adaptive(build, order: int) -> TruncatedSeries:
    work = order + 2
    for _ in range(64):
        out = build(work)
        if out.order >= order:
            return out.truncate(order)
        work += order - out.order + 1
    raise RuntimeError("precision did not converge")


_LOCAL_VAR = {0: "x", 1: "u", _INF: "t"}


def _puncture(p):
    if p in ("inf", "oo", "infinity"):
        return _INF
    if p in ("0", "1"):
        return int(p)
    if p in (0, 1, _INF):
        return p
    raise ValueError(f"unknown puncture {p!r}")


def expand_at(f: PRF, puncture, order: int) -> TruncatedSeries:
    """Laurent expansion in the local parameter x (at 0), u = 1 - x (at 1) or t = 1/x (at inf)."""
    puncture = _puncture(puncture)
    var = _LOCAL_VAR[puncture]

    def local(work):
        if puncture == 0:
            return TruncatedSeries.gen(work, var)
        if puncture == 1:
            return 1 - TruncatedSeries.gen(work, var)
        return TruncatedSeries.monomial(-1, work, 1, var)

    return _adaptive(lambda w: _substitute_series(f, local(w)), order)


def _one_minus_exp_neg(work: int, var: str) -> TruncatedSeries:
    return 1 - TruncatedSeries.monomial(1, work, -1, var).exp()


def chart_c(f: PRF, order: int) -> TruncatedSeries:
    """``f`` in the Borel chart ``x = 1 - exp(-c)``: the expansion at 0 composed with that series."""

    def build(work):
        return compose(expand_at(f, 0, work).with_var("c"), _one_minus_exp_neg(work, "c"))

    return _adaptive(build, order)


def chart_h(f: PRF, order: int) -> TruncatedSeries:
    """``f`` in the chart ``x = exp(-h)``, i.e. ``u = 1 - x = 1 - exp(-h)`` at the puncture 1."""

    def build(work):
        return compose(expand_at(f, 1, work).with_var("h"), _one_minus_exp_neg(work, "h"))

    return _adaptive(build, order)


def h_of_c(c):
    """``h = -log(1 - exp(-c))`` in mpmath precision; an involution of the positive reals."""
    c = mpmath.mpf(c)
    if c > 1:
        return -mpmath.log1p(-mpmath.exp(-c))
    return -mpmath.log(-mpmath.expm1(-c))


def c_h_involution_check(samples: Sequence[float], tol: float = 1e-12) -> CheckReport:
    params = {"samples": len(samples), "tol": tol}
    if any(c <= 0 for c in samples):
        raise ValueError("samples must be positive")
    worst = 0.0
    with mpmath.workdps(40):
        for c in samples:
            back = h_of_c(h_of_c(c))
            err = float(abs(back - c) / max(1, abs(c)))
            worst = max(worst, err)
            if err > tol:
                return CheckReport("ch-involution", params, FAIL, {"sample": c, "rel_error": err})
        ordered = sorted(samples)
        hs = [h_of_c(c) for c in ordered]
        for c, h0, h1 in zip(ordered[1:], hs, hs[1:]):
            if not h1 < h0:
                return CheckReport("ch-involution", params, FAIL, {"sample": c, "reason": "h not decreasing"})
        fixed = float(abs(h_of_c(mpmath.log(2)) - mpmath.log(2)))
    if fixed > tol:
        return CheckReport("ch-involution", params, FAIL, {"sample": math.log(2), "fixed_point_error": fixed})
    return CheckReport(
        "ch-involution", params, PASS, {"max_rel_error": worst},
        "h(h(c)) = c; h decreasing; log 2 is the fixed point",
    )


def log_spaced(lo: float, hi: float, n: int) -> list[float]:
    a, b = math.log10(lo), math.log10(hi)
    return [10 ** (a + (b - a) * i / (n - 1)) for i in range(n)]


# -- expression parser -----------------------------------------------------------


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(src: str):
    pos = 0
    out = []
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m.end() == pos or not src[pos:].strip():
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(src)))
    return out


class _Parser:
    def __init__(self, src: str, var: str):
        self.toks = _tokenize(src)
        self.i = 0
        self.var = var

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ExprSyntaxError(f"expected {op!r}", t[2])

    def expr(self) -> PRF:
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> PRF:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise ZeroDivisionError(f"division by zero at offset {pos}")
                acc = acc / rhs
        return acc

    def factor(self) -> PRF:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                sign = -1
            t = self.take()
            if t[0] != "int":
                raise ExprSyntaxError("expected integer exponent", t[2])
            return base ** (sign * t[1])
        return base

    def atom(self) -> PRF:
        kind, val, pos = self.take()
        if kind == "int":
            return PRF.const(val)
        if kind == "name":
            if val != self.var:
                raise ExprSyntaxError(f"unknown symbol {val!r}", pos)
            return PRF.x()
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", pos)
        raise ExprSyntaxError(f"unexpected {val!r}", pos)


def parse_expr(src: str, var: str = "x") -> PRF:
    """Parse ``+ - * / ^`` expressions in integers and one variable into a ring element.

    Raises :class:`ExprSyntaxError` (with a byte offset) or
    :class:`PoleOutsidePunctures` for divisors such as ``2 - x``.
    """
    if not src.strip():
        raise ExprSyntaxError("empty expression", 0)
    p = _Parser(src, var)
    out = p.expr()
    t = p.peek()
    if t[0] != "end":
        raise ExprSyntaxError(f"unexpected {t[1]!r}", t[2])
    return out
