"""Truncated Laurent series over exact rationals, plus their mod-p shadows.

A :class:`TruncatedSeries` stands for ``sum(c_k x^k for k in valuation..order) + O(x^(order+1))``.
Every operation returns the largest order that is provably correct from its
inputs; reading a coefficient beyond that order raises :class:`PrecisionError`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

Scalar = Union[int, Fraction]

INF = math.inf


class PrecisionError(IndexError):
    """A coefficient past the known truncation order was requested."""


class VariableMismatch(ValueError):
    pass


class NonIntegralCoefficient(ArithmeticError):
    """Raised by :func:`reduce_mod_p` at the first coefficient with negative valuation."""

    def __init__(self, exponent: int, valuation: int):
        super().__init__(f"coefficient of degree {exponent} has valuation {valuation} < 0")
        self.exponent = exponent
        self.valuation = valuation


def vp(r: Scalar, p: int) -> int | float:
    """p-adic valuation of a rational; ``math.inf`` for zero."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        return INF
    v = 0
    num, den = r.numerator, r.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class TruncatedSeries:
    valuation: int
    coeffs: tuple[Fraction, ...]
    order: int
    var: str = "x"

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order - self.valuation + 1 and not (
            len(coeffs) == 0 and self.valuation > self.order
        ):
            raise ValueError(
                f"need {self.order - self.valuation + 1} coefficients, got {len(coeffs)}"
            )
        # strip leading zeros; the zero series has valuation order + 1
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", coeffs[i:])
        if i == len(coeffs):
            object.__setattr__(self, "valuation", self.order + 1)
        else:
            object.__setattr__(self, "valuation", self.valuation + i)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_coeffs(
        cls, coeffs: Iterable[Scalar], order: int, valuation: int = 0, var: str = "x"
    ) -> TruncatedSeries:
        """Build from coefficients starting at ``valuation``; missing ones are zero."""
        cs = [Fraction(c) for c in coeffs]
        n = order - valuation + 1
        if n <= 0:
            return cls.zero(order, var)
        cs = (cs + [Fraction(0)] * n)[:n]
        return cls(valuation, tuple(cs), order, var)

    @classmethod
    def from_function(
        cls, fn: Callable[[int], Scalar], order: int, valuation: int = 0, var: str = "x"
    ) -> TruncatedSeries:
        return cls.from_coeffs((fn(k) for k in range(valuation, order + 1)), order, valuation, var)

    @classmethod
    def zero(cls, order: int, var: str = "x") -> TruncatedSeries:
        return cls(order + 1, (), order, var)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Scalar = 1, var: str = "x") -> TruncatedSeries:
        if k > order:
            return cls.zero(order, var)
        return cls(k, (Fraction(coeff),) + (Fraction(0),) * (order - k), order, var)

    @classmethod
    def one(cls, order: int, var: str = "x") -> TruncatedSeries:
        return cls.monomial(0, order, 1, var)

    @classmethod
    def gen(cls, order: int, var: str = "x") -> TruncatedSeries:
        return cls.monomial(1, order, 1, var)

    # -- access -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise PrecisionError(f"coefficient {n} requested, series known only to order {self.order}")
        if n < self.valuation:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    def coefficient_list(self, start: int | None = None, stop: int | None = None) -> list[Fraction]:
        """Coefficients for exponents ``start..stop`` inclusive."""
        start = self.valuation if start is None else start
        stop = self.order if stop is None else stop
        return [self[k] for k in range(start, stop + 1)]

    def items(self):
        for i, c in enumerate(self.coeffs):
            yield self.valuation + i, c

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroDivisionError("zero series has no leading coefficient")
        return self.coeffs[0]

    def truncate(self, order: int) -> TruncatedSeries:
        if order >= self.order:
            return self
        if order < self.valuation:
            return TruncatedSeries.zero(order, self.var)
        return TruncatedSeries(self.valuation, self.coeffs[: order - self.valuation + 1], order, self.var)

    def shift(self, k: int) -> TruncatedSeries:
        """Exact multiplication by ``x^k``."""
        if self.is_zero():
            return TruncatedSeries.zero(self.order + k, self.var)
        return TruncatedSeries(self.valuation + k, self.coeffs, self.order + k, self.var)

    def subs_scale(self, a: Scalar) -> TruncatedSeries:
        """``f(a x)`` for a nonzero rational ``a``."""
        a = Fraction(a)
        if a == 0:
            raise ValueError("scale must be nonzero")
        cs = [c * a**k for k, c in self.items()]
        return TruncatedSeries(self.valuation, tuple(cs), self.order, self.var) if cs else self

    def with_var(self, var: str) -> TruncatedSeries:
        return TruncatedSeries(self.valuation, self.coeffs, self.order, var)

    def evaluate(self, x: float) -> float:
        """Float evaluation of the known part (Horner)."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc * x**self.valuation if self.coeffs else 0.0

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                raise VariableMismatch(f"{self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            if self.order < 0:
                return TruncatedSeries.zero(self.order, self.var)
            return TruncatedSeries.monomial(0, self.order, other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        if lo > order:
            return TruncatedSeries.zero(order, self.var)
        cs = [self[k] + other[k] for k in range(lo, order + 1)]
        return TruncatedSeries(lo, tuple(cs), order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.valuation, tuple(-c for c in self.coeffs), self.order, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TruncatedSeries.zero(self.order, self.var)
            return TruncatedSeries(
                self.valuation, tuple(c * other for c in self.coeffs), self.order, self.var
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        if n == 0:
            return TruncatedSeries.one(self.order, self.var)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def reciprocal(self) -> TruncatedSeries:
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of a series that is zero to its order")
        v = self.valuation
        rel = self.order - v
        a0 = self.coeffs[0]
        inv0 = 1 / a0
        out = [inv0]
        cs = self.coeffs
        for n in range(1, rel + 1):
            s = Fraction(0)
            for k in range(1, n + 1):
                c = cs[k]
                if c:
                    s += c * out[n - k]
            out.append(-s * inv0)
        return TruncatedSeries(-v, tuple(out), -v + rel, self.var)

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return compose(self, inner)

    # -- analytic -----------------------------------------------------------

    def derivative(self) -> TruncatedSeries:
        cs = [k * c for k, c in self.items()]
        if not cs:
            return TruncatedSeries.zero(self.order - 1, self.var)
        return TruncatedSeries(self.valuation - 1, tuple(cs), self.order - 1, self.var)

    def integral(self) -> TruncatedSeries:
        """Antiderivative with zero constant term."""
        if self.valuation <= -1 and self[-1] != 0:
            raise ValueError("series has a residue; antiderivative is not a Laurent series")
        cs = [(k + 1, c / (k + 1)) for k, c in self.items() if k != -1]
        order = self.order + 1
        if not cs:
            return TruncatedSeries.zero(order, self.var)
        lo = cs[0][0]
        dense = [Fraction(0)] * (order - lo + 1)
        for k, c in cs:
            dense[k - lo] = c
        return TruncatedSeries(lo, tuple(dense), order, self.var)

    def exp(self) -> TruncatedSeries:
        if self.valuation < 1:
            raise ValueError("exp needs a series without constant term")
        n_max = self.order
        f = [self[k] for k in range(n_max + 1)]
        nz = [(k, k * f[k]) for k in range(1, n_max + 1) if f[k]]
        g = [Fraction(1)]
        for n in range(1, n_max + 1):
            s = Fraction(0)
            for k, kf in nz:
                if k > n:
                    break
                s += kf * g[n - k]
            g.append(s / n)
        return TruncatedSeries(0, tuple(g), n_max, self.var)

    def log(self) -> TruncatedSeries:
        if self.valuation != 0 or self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        return (self.derivative() / self).integral()

    def sqrt(self) -> TruncatedSeries:
        """Square root on the branch with positive leading coefficient."""
        if self.is_zero() or self.valuation % 2:
            raise ValueError("sqrt needs a nonzero series of even valuation")
        a0 = self.coeffs[0]
        r0 = _rational_sqrt(a0)
        half = self.valuation // 2
        rel = self.order - self.valuation
        cs = self.coeffs
        g = [r0]
        for n in range(1, rel + 1):
            s = sum((g[k] * g[n - k] for k in range(1, n)), Fraction(0))
            g.append((cs[n] - s) / (2 * r0))
        return TruncatedSeries(half, tuple(g), half + rel, self.var)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "variable": self.var,
            "valuation": self.valuation,
            "order": self.order,
            "coeffs": [_frac_str(c) for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> TruncatedSeries:
        return cls(int(d["valuation"]), tuple(Fraction(c) for c in d["coeffs"]), int(d["order"]), d["variable"])

    @classmethod
    def from_json(cls, s: str) -> TruncatedSeries:
        return cls.from_dict(json.loads(s))

    def __str__(self) -> str:
        terms = []
        for k, c in self.items():
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = f"{c}" if not mono else f"({c})*" if c.denominator != 1 else f"{c}*"
            terms.append(f"{coef}{mono}")
        terms.append(f"O({self.var}^{self.order + 1})")
        return " + ".join(terms).replace("+ -", "- ")


def _rational_sqrt(a: Fraction) -> Fraction:
    if a <= 0:
        raise ValueError(f"leading coefficient {a} is not a positive square")
    n, d = math.isqrt(a.numerator), math.isqrt(a.denominator)
    if n * n != a.numerator or d * d != a.denominator:
        raise ValueError(f"leading coefficient {a} is not a rational square")
    return Fraction(n, d)


def _mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.valuation + b.order, b.valuation + a.order)
    if a.is_zero() or b.is_zero():
        return TruncatedSeries.zero(order, a.var)
    v = a.valuation + b.valuation
    n = order - v + 1
    if n <= 0:
        return TruncatedSeries.zero(order, a.var)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * n
    for i, x in enumerate(ac):
        if i >= n:
            break
        if not x:
            continue
        for j in range(min(len(bc), n - i)):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(v, tuple(out), order, a.var)


def arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Dispatch ``add``/``sub``/``mul``/``div`` on two series."""
    if a.var != b.var:
        raise VariableMismatch(f"{a.var!r} vs {b.var!r}")
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    return ops[op]()


def compose(outer: TruncatedSeries | Sequence[Scalar], inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner)``.

    ``outer`` may be a plain coefficient sequence, read as an exact polynomial;
    then ``inner`` may have a constant term. For a genuine truncated series the
    inner series must have positive valuation.
    """
    if not isinstance(outer, TruncatedSeries):
        acc = TruncatedSeries.zero(inner.order, inner.var)
        for c in reversed(list(outer)):
            acc = acc * inner + Fraction(c)
        return acc
    vg = inner.valuation
    if vg < 1:
        raise ValueError("inner series must have no constant term (valuation >= 1)")
    vf = outer.valuation
    cap = vg * (outer.order + 1) - 1
    if outer.is_zero():
        return TruncatedSeries.zero(cap, inner.var)
    # outer = x^vf * h(x) with h a polynomial; evaluate h(inner) by Horner
    work = cap - vg * vf
    g = inner.truncate(work)
    h = TruncatedSeries.zero(work, inner.var)
    for c in reversed(outer.coeffs):
        h = (h * g + c).truncate(work)
    result = h * g**vf if vf else h
    return result.truncate(cap)


def invert_comp(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse by Lagrange inversion: ``[x^n] g = [x^(n-1)] (x/f)^n / n``."""
    if f.valuation != 1:
        raise ValueError("compositional inverse needs valuation exactly 1")
    n_max = f.order
    h = f.shift(-1).reciprocal()  # x/f, known to order n_max - 1
    hc = [h[k] for k in range(n_max)]
    out = [Fraction(0)] * (n_max + 1)
    power = [Fraction(1)] + [Fraction(0)] * (n_max - 1)  # h^0
    for n in range(1, n_max + 1):
        new = [Fraction(0)] * n_max
        for i, x in enumerate(power):
            if x:
                for j in range(n_max - i):
                    if hc[j]:
                        new[i + j] += x * hc[j]
        power = new
        out[n] = power[n - 1] / n
    return TruncatedSeries(1, tuple(out[1:]), n_max, f.var)


def analytic(f: TruncatedSeries, op: str) -> TruncatedSeries:
    """Dispatch ``exp``/``log``/``sqrt``/``derive``."""
    ops = {"exp": f.exp, "log": f.log, "sqrt": f.sqrt, "derive": f.derivative}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    return ops[op]()


def padic_profile(f: TruncatedSeries, p: int) -> list[int | float]:
    """v_p of every coefficient from ``f.valuation`` through ``f.order``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return [vp(f[k], p) for k in range(f.valuation, f.order + 1)]


def first_difference(a, b) -> int | None:
    """Lowest exponent at which two series (or two mod-p series) differ, up to the common order."""
    order = min(a.order, b.order)
    lo = min(a.valuation, b.valuation)
    for k in range(lo, order + 1):
        if a[k] != b[k]:
            return k
    return None


def agree(a, b) -> bool:
    return first_difference(a, b) is None


# -- mod p --------------------------------------------------------------------


@dataclass(frozen=True)
class ModPSeries:
    p: int
    valuation: int
    coeffs: tuple[int, ...]
    order: int
    var: str = "x"

    def __post_init__(self):
        cs = tuple(c % self.p for c in self.coeffs)
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", cs[i:])
        object.__setattr__(self, "valuation", self.order + 1 if i == len(cs) else self.valuation + i)

    @classmethod
    def from_exponents(cls, p: int, exponents: Iterable[int], order: int, var: str = "x") -> ModPSeries:
        """Sum of ``x^e`` over the given exponents (each counted mod p)."""
        exps = [e for e in exponents if e <= order]
        if not exps:
            return cls(p, order + 1, (), order, var)
        lo = min(exps)
        cs = [0] * (order - lo + 1)
        for e in exps:
            cs[e - lo] += 1
        return cls(p, lo, tuple(cs), order, var)

    def __getitem__(self, n: int) -> int:
        if n > self.order:
            raise PrecisionError(f"coefficient {n} beyond order {self.order}")
        if n < self.valuation:
            return 0
        return self.coeffs[n - self.valuation]

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        return [self.valuation + i for i, c in enumerate(self.coeffs) if c]

    def _check(self, other: ModPSeries):
        if self.p != other.p:
            raise ValueError("mixing residue characteristics")

    def __add__(self, other: ModPSeries) -> ModPSeries:
        self._check(other)
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        if lo > order:
            return ModPSeries(self.p, order + 1, (), order, self.var)
        return ModPSeries(self.p, lo, tuple(self[k] + other[k] for k in range(lo, order + 1)), order, self.var)

    def __neg__(self) -> ModPSeries:
        return ModPSeries(self.p, self.valuation, tuple(-c for c in self.coeffs), self.order, self.var)

    def __sub__(self, other: ModPSeries) -> ModPSeries:
        return self + (-other)

    def __mul__(self, other: ModPSeries) -> ModPSeries:
        self._check(other)
        order = min(self.valuation + other.order, other.valuation + self.order)
        if self.is_zero() or other.is_zero():
            return ModPSeries(self.p, order + 1, (), order, self.var)
        v = self.valuation + other.valuation
        n = order - v + 1
        out = [0] * max(n, 0)
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j, b in enumerate(other.coeffs[: n - i]):
                    out[i + j] += a * b
        return ModPSeries(self.p, v, tuple(out), order, self.var)

    def reciprocal(self) -> ModPSeries:
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero mod-p series")
        p, cs = self.p, self.coeffs
        inv0 = pow(cs[0], -1, p)
        rel = self.order - self.valuation
        out = [inv0]
        for n in range(1, rel + 1):
            s = sum(cs[k] * out[n - k] for k in range(1, n + 1))
            out.append((-s * inv0) % p)
        return ModPSeries(p, -self.valuation, tuple(out), -self.valuation + rel, self.var)

    def derivative(self) -> ModPSeries:
        cs = tuple((self.valuation + i) * c for i, c in enumerate(self.coeffs))
        if not cs:
            return ModPSeries(self.p, self.order, (), self.order - 1, self.var)
        return ModPSeries(self.p, self.valuation - 1, cs, self.order - 1, self.var)

    def truncate(self, order: int) -> ModPSeries:
        if order >= self.order:
            return self
        if order < self.valuation:
            return ModPSeries(self.p, order + 1, (), order, self.var)
        return ModPSeries(self.p, self.valuation, self.coeffs[: order - self.valuation + 1], order, self.var)

    def to_dict(self) -> dict:
        return {
            "variable": self.var,
            "p": self.p,
            "valuation": self.valuation,
            "order": self.order,
            "coeffs": list(self.coeffs),
        }

    def __str__(self) -> str:
        terms = [
            ("1" if k == 0 else self.var if k == 1 else f"{self.var}^{k}") if c == 1 else f"{c}*{self.var}^{k}"
            for k, c in zip(range(self.valuation, self.order + 1), self.coeffs)
            if c
        ]
        terms.append(f"O({self.var}^{self.order + 1})")
        return " + ".join(terms) + f"  (mod {self.p})"


def reduce_mod_p(f: TruncatedSeries, p: int) -> ModPSeries:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    res = []
    for k, c in f.items():
        v = vp(c, p)
        if v < 0:
            raise NonIntegralCoefficient(k, v)
        res.append(c.numerator * pow(c.denominator, -1, p) % p)
    if not res:
        return ModPSeries(p, f.order + 1, (), f.order, f.var)
    return ModPSeries(p, f.valuation, tuple(res), f.order, f.var)


# -- polynomials in the formal symbol b ----------------------------------------


@dataclass(frozen=True)
class PolyB:
    """Polynomial in ``b`` with rational coefficients, low degree first."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def binom(cls, k: int) -> PolyB:
        """``binom(b, k) = b (b-1) ... (b-k+1) / k!``."""
        out = cls((1,))
        for i in range(k):
            out = out * cls((-i, 1))
        return out * Fraction(1, math.factorial(k))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_polyb(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolyB(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return PolyB(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_polyb(other))

    def __mul__(self, other):
        other = _as_polyb(other)
        if not self.coeffs or not other.coeffs:
            return PolyB()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, c in enumerate(other.coeffs):
                out[i + j] += a * c
        return PolyB(tuple(out))

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, b: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * b + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" + ("" if k == 0 else "*b" if k == 1 else f"*b^{k}"))
        return " + ".join(parts)


def _as_polyb(x) -> PolyB:
    if isinstance(x, PolyB):
        return x
    if isinstance(x, (int, Fraction)):
        return PolyB((x,))
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial in b")


@dataclass(frozen=True)
class BivariateSeries:
    """Power series in two variables truncated at total degree ``order``.

    Coefficients live in any ring supporting ``+`` and ``*`` (rationals or
    :class:`PolyB`). Absent keys are zero.
    """

    coeffs: dict = field(hash=False)
    order: int
    zero: object = Fraction(0)

    @classmethod
    def from_dict(cls, d: dict, order: int, zero=Fraction(0)) -> BivariateSeries:
        return cls({k: v for k, v in d.items() if sum(k) <= order and v}, order, zero)

    def __getitem__(self, ij: tuple[int, int]):
        if sum(ij) > self.order:
            raise PrecisionError(f"total degree {sum(ij)} beyond order {self.order}")
        return self.coeffs.get(ij, self.zero)

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, self.zero) + v
        return BivariateSeries.from_dict(out, order, self.zero)

    def __mul__(self, other) -> BivariateSeries:
        if not isinstance(other, BivariateSeries):
            return BivariateSeries.from_dict({k: v * other for k, v in self.coeffs.items()}, self.order, self.zero)
        order = min(self.order, other.order)
        out: dict = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                if i + j + k + l <= order:
                    key = (i + k, j + l)
                    out[key] = out.get(key, self.zero) + a * b
        return BivariateSeries.from_dict(out, order, self.zero)

    def keys_upto(self):
        for d in range(self.order + 1):
            for i in range(d + 1):
                yield (i, d - i)
