"""q-integers, q-Pochhammer symbols, Gaussian binomials, and rational
functions of q with structurally factored denominators.

The only denominators ever needed are rational multiples of products of
(1 - q^m); a QRat keeps that structure explicit instead of reducing to
lowest terms.  Equality and congruence are decided by cross
multiplication, which turns coprimality with Phi_n into the purely
arithmetic check "n divides no factor exponent m".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .polyring import LaurentPoly, Scalar


@dataclass(frozen=True)
class FactoredDen:
    """A nonzero rational scalar times a multiset of factors (1 - q^m)."""

    scalar: Fraction
    factors: tuple  # sorted tuple of positive ints, one entry per factor

    def __post_init__(self):
        if self.scalar == 0:
            raise ValueError("denominator scalar must be nonzero")
        if any(m < 1 for m in self.factors):
            raise ValueError("denominator factor exponents must be >= 1")
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @staticmethod
    def one() -> "FactoredDen":
        return FactoredDen(Fraction(1), ())

    def poly(self) -> LaurentPoly:
        """Expand scalar * prod (1 - q^m) to a LaurentPoly."""
        return factor_product(self.factors) * self.scalar

    def counter(self) -> Counter:
        return Counter(self.factors)


def factor_product(exponents) -> LaurentPoly:
    """prod over m of (1 - q^m), as an honest polynomial."""
    acc = LaurentPoly.one()
    for m in exponents:
        acc = acc - acc.shift(m)
    return acc


@dataclass(frozen=True)
class QRat:
    """Exact rational function num / (den.scalar * prod(1 - q^m))."""

    num: LaurentPoly
    den: FactoredDen

    @staticmethod
    def from_poly(p: LaurentPoly) -> "QRat":
        return QRat(p, FactoredDen.one())

    @staticmethod
    def from_scalar(c: Scalar) -> "QRat":
        return QRat(LaurentPoly.constant(c), FactoredDen.one())

    @staticmethod
    def monomial(exp: int, coef: Scalar = 1) -> "QRat":
        return QRat(LaurentPoly.monomial(exp, coef), FactoredDen.one())

    @staticmethod
    def zero() -> "QRat":
        return QRat(LaurentPoly.zero(), FactoredDen.one())

    def __add__(self, other) -> "QRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        fc, gc = self.den.counter(), other.den.counter()
        union = fc | gc  # max multiplicity, no gcd against numerators
        num = (self.num * other.den.scalar * factor_product((union - fc).elements())
               + other.num * self.den.scalar * factor_product((union - gc).elements()))
        den = FactoredDen(self.den.scalar * other.den.scalar,
                          tuple(union.elements()))
        return QRat(num, den)

    __radd__ = __add__

    def __neg__(self) -> "QRat":
        return QRat(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QRat":
        if isinstance(other, (int, Fraction)):
            return QRat(self.num * other, self.den)
        if isinstance(other, LaurentPoly):
            return QRat(self.num * other, self.den)
        if not isinstance(other, QRat):
            return NotImplemented
        return QRat(self.num * other.num,
                    FactoredDen(self.den.scalar * other.den.scalar,
                                self.den.factors + other.den.factors))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        lhs = self.num * other.den.scalar * factor_product(other.den.factors)
        rhs = other.num * self.den.scalar * factor_product(self.den.factors)
        return lhs == rhs

    def __hash__(self):
        raise TypeError("QRat is not hashable (equality is semantic)")

    def value(self, x: Scalar) -> Fraction:
        """Evaluate at a rational point avoiding denominator zeros."""
        den = Fraction(self.den.scalar)
        for m in self.den.factors:
            den *= 1 - Fraction(x) ** m
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={x}")
        return Fraction(self.num(x)) / den


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, LaurentPoly):
        return QRat.from_poly(x)
    if isinstance(x, (int, Fraction)):
        return QRat.from_scalar(x) if x != 0 else QRat.zero()
    return NotImplemented


# named function forms of the operators
def qrat_add(f: QRat, g: QRat) -> QRat:
    return f + g


def qrat_mul(f: QRat, g: QRat) -> QRat:
    return f * g


def q_integer(m: int, b: int = 1) -> QRat:
    """[m]_{q^b} = (1 - q^{mb}) / (1 - q^b) for nonzero integer m."""
    if m == 0:
        raise ValueError("q_integer is undefined at m = 0; use a zero QRat")
    if b < 1:
        raise ValueError("base exponent must be >= 1")
    num = LaurentPoly.from_dict({0: 1, m * b: -1})
    return QRat(num, FactoredDen(Fraction(1), (b,)))


def q_pochhammer(u: int, b: int, k: int) -> LaurentPoly:
    """(q^u; q^b)_k = prod_{j=0}^{k-1} (1 - q^{u + j b})."""
    if k < 0:
        raise ValueError("Pochhammer length must be >= 0")
    acc = LaurentPoly.one()
    for j in range(k):
        acc = acc - acc.shift(u + j * b)
    return acc


def gauss_binomial(N: int, k: int, b: int = 1) -> LaurentPoly:
    """Gaussian binomial [N choose k] in base q^b.

    For N >= 0 this is the usual polynomial (zero when k > N); for N < 0
    it is the Laurent polynomial obtained by exact division.  An inexact
    division can only be an implementation bug, hence the assertion.
    """
    if k < 0:
        raise ValueError("lower index must be >= 0")
    if k == 0:
        return LaurentPoly.one()
    if 0 <= N < k:
        return LaurentPoly.zero()
    num = q_pochhammer(b * (N - k + 1), b, k)
    den = q_pochhammer(b, b, k)
    shift = -num.low if num.low < 0 else 0
    quo, rem = num.shift(shift).divrem(den)
    assert rem.is_zero, f"inexact Gaussian binomial division: N={N}, k={k}, b={b}"
    return quo.shift(-shift)


def binom_rational_index(r: int, d: int, k: int) -> QRat:
    """[-r/d choose k] in base q^d, defined through the Pochhammer rewrite

        (q^r; q^d)_k / (q^d; q^d)_k
            = (-1)^k q^{r k + d k(k-1)/2} [-r/d choose k]_{q^d}.
    """
    if d < 1:
        raise ValueError("base exponent must be >= 1")
    if k < 0:
        raise ValueError("lower index must be >= 0")
    sign = -1 if k % 2 else 1
    monomial = LaurentPoly.monomial(-r * k - d * (k * (k - 1) // 2), sign)
    num = monomial * q_pochhammer(r, d, k)
    return QRat(num, FactoredDen(Fraction(1), tuple(d * j for j in range(1, k + 1))))


def poch_to_binom_check(r: int, d: int, k: int) -> bool:
    """Exact-identity check of the Pochhammer-to-binomial rewrite.

    The right side expands the binomial with (possibly) rational upper
    index as prod_{j=0}^{k-1}(1 - q^{-r - d j}) / prod_{j=1}^{k}(1 - q^{d j}),
    and the two sides are compared as rational functions by cross
    multiplication.
    """
    lhs_num = q_pochhammer(r, d, k)
    sign = -1 if k % 2 else 1
    # prod_{j=0}^{k-1} (1 - q^{-r - d j})
    acc = LaurentPoly.one()
    for j in range(k):
        acc = acc - acc.shift(-r - d * j)
    rhs_num = LaurentPoly.monomial(r * k + d * (k * (k - 1) // 2), sign) * acc
    # both sides share the denominator (q^d; q^d)_k, so compare numerators
    return lhs_num == rhs_num


def qchu_check(form: int, n: int, m: int, k: int) -> bool:
    """Check one of the two convolution identities for Gaussian binomials:

        form 1:  [n+m, k] = sum_j q^{(n-j)(k-j)} [n, j] [m, k-j]
        form 2:  [n+m, k] = sum_j q^{j(m-k+j)}   [n, j] [m, k-j]
    """
    if form not in (1, 2):
        raise ValueError("form must be 1 or 2")
    if n < 0 or m < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    lhs = gauss_binomial(n + m, k)
    rhs = LaurentPoly.zero()
    for j in range(k + 1):
        exp = (n - j) * (k - j) if form == 1 else j * (m - k + j)
        rhs = rhs + (gauss_binomial(n, j) * gauss_binomial(m, k - j)).shift(exp)
    return lhs == rhs
