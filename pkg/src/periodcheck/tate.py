"""Coordinate rings of circle-equivariant K-theory and the boundary map.

The Tate ring Z[k, 1/k, 1/(1-k)] is modelled by :class:`PuncturedRationalFunction`
in the variable k (kappa). Borel completion expands in ``q = 1 - 1/k``; the
Chern character substitutes ``k = exp(c)``. The boundary sends the principal
part of a q-Laurent series to an integer combination of binomials binom(b, j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .punctured import PRF, _adaptive, _substitute_series
from .series import PolyB, TruncatedSeries


@dataclass(frozen=True)
class TateElement:
    func: PRF

    @classmethod
    def kappa(cls) -> TateElement:
        return cls(PRF.x())

    def __add__(self, other: TateElement) -> TateElement:
        return TateElement(self.func + other.func)

    def __sub__(self, other: TateElement) -> TateElement:
        return TateElement(self.func - other.func)

    def __mul__(self, other: TateElement) -> TateElement:
        return TateElement(self.func * other.func)

    def __pow__(self, k: int) -> TateElement:
        return TateElement(self.func**k)


def _as_func(e) -> PRF:
    return e.func if isinstance(e, TateElement) else e


def expand_in_q(e: TateElement | PRF, order: int) -> TruncatedSeries:
    """Substitute ``k = 1/(1 - q)`` and expand as a Laurent series in q."""
    f = _as_func(e)
    return _adaptive(lambda w: _substitute_series(f, (1 - TruncatedSeries.gen(w, "q")).reciprocal()), order)


def chern_character(e: TateElement | PRF, order: int) -> TruncatedSeries:
    """Substitute ``k = exp(c)``."""
    f = _as_func(e)
    return _adaptive(lambda w: _substitute_series(f, TruncatedSeries.gen(w, "c").exp()), order)


def bott_graded_expand(order: int) -> TruncatedSeries:
    """``1 / (1 - qv) = sum (qv)^k`` in the single symbol qv."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return (1 - TruncatedSeries.gen(order, "qv")).reciprocal()


def bott_degree(k: int) -> int:
    """Cohomological degree of ``(qv)^k``: q has degree 0 and v degree -2."""
    return -2 * k


@lru_cache(maxsize=None)
def stirling2(k: int, j: int) -> int:
    """Stirling numbers of the second kind, S(k, j) = j S(k-1, j) + S(k-1, j-1)."""
    if not 0 <= j <= k:
        return 0
    if k == 0:
        return 1
    if j == 0:
        return 0
    return j * stirling2(k - 1, j) + stirling2(k - 1, j - 1)


@dataclass(frozen=True)
class BinomBasisPoly:
    """``sum a_j binom(b, j)`` with integer a_j."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = list(self.coeffs)
        for c in cs:
            if Fraction(c).denominator != 1:
                raise ValueError(f"binomial-basis coefficient {c} is not an integer")
        cs = [int(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __add__(self, other: BinomBasisPoly) -> BinomBasisPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return BinomBasisPoly(tuple(x + y for x, y in zip(a, b)))

    def scale(self, c: int) -> BinomBasisPoly:
        return BinomBasisPoly(tuple(c * a for a in self.coeffs))

    def __call__(self, m: int) -> int:
        return sum(a * math.comb(m, j) for j, a in enumerate(self.coeffs)) if m >= 0 else int(self.to_polyb()(m))

    def to_polyb(self) -> PolyB:
        out = PolyB()
        for j, a in enumerate(self.coeffs):
            out = out + PolyB.binom(j) * a
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        terms = [f"{a}*binom(b,{j})" for j, a in enumerate(self.coeffs) if a]
        return " + ".join(terms) or "0"


def basis_convert(poly: Sequence[int]) -> BinomBasisPoly:
    """Rewrite ``sum c_k m^k`` via ``m^k = sum_j S(k, j) j! binom(m, j)``."""
    out = [0] * len(poly)
    for k, c in enumerate(poly):
        for j in range(k + 1):
            out[j] += c * stirling2(k, j) * math.factorial(j)
    return BinomBasisPoly(tuple(out))


Normalization = Callable[[int], Sequence[int]]


def stirling_normalization(k: int) -> list[int]:
    """``Q_j^k = (-1)^k S(k, j) j!``: the boundary of q^-k is the functional k^m -> (-m)^k."""
    return [(-1) ** k * stirling2(k, j) * math.factorial(j) for j in range(k + 1)]


def q_coefficients(k: int, normalization: Normalization = stirling_normalization) -> list[int]:
    """Row k of the Q table (coefficients of binom(b, j) in the boundary of q^-k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return list(normalization(k))


def q_table(kmax: int, normalization: Normalization = stirling_normalization) -> list[list[int]]:
    return [q_coefficients(k, normalization) for k in range(kmax + 1)]


def boundary(f: TruncatedSeries, normalization: Normalization = stirling_normalization) -> BinomBasisPoly:
    """Boundary of a q-Laurent series: only the principal part contributes."""
    out = BinomBasisPoly()
    for k in range(1, -f.valuation + 1):
        a = f[-k]
        if a:
            if a.denominator != 1:
                raise ValueError(f"coefficient of q^-{k} is not an integer: {a}")
            out = out + BinomBasisPoly(tuple(q_coefficients(k, normalization))).scale(int(a))
    return out
