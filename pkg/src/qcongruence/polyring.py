"""Exact Laurent polynomials in one variable q over the rationals.

A LaurentPoly is stored densely: an integer ``low`` (the exponent of the
lowest term) and a tuple of coefficients, where ``coeffs[i]`` is the
coefficient of ``q**(low + i)``.  Coefficients are Python ints or
``fractions.Fraction``; all arithmetic is exact.  The zero polynomial is
canonically ``low == 0, coeffs == ()``; for nonzero polynomials the first
and last coefficients are nonzero.

Everything here is immutable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class LaurentPoly:
    __slots__ = ("low", "coeffs")

    def __init__(self, low: int, coeffs: Iterable[Scalar]):
        coeffs = list(coeffs)
        # trim to canonical form
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        if start == len(coeffs):
            object.__setattr__(self, "low", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "low", low + start)
            object.__setattr__(self, "coeffs", tuple(coeffs[start:]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return _ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return _ONE

    @staticmethod
    def monomial(exp: int, coef: Scalar = 1) -> "LaurentPoly":
        return LaurentPoly(exp, (coef,))

    @staticmethod
    def constant(c: Scalar) -> "LaurentPoly":
        return LaurentPoly(0, (c,))

    @staticmethod
    def from_dict(d: dict) -> "LaurentPoly":
        if not d:
            return _ZERO
        lo = min(d)
        hi = max(d)
        coeffs = [0] * (hi - lo + 1)
        for e, c in d.items():
            coeffs[e - lo] = c
        return LaurentPoly(lo, coeffs)

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Exponent of the highest term; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def coefficient(self, exp: int) -> Scalar:
        i = exp - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> dict:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] = c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, [-c for c in self.coeffs])

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

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _ZERO
            return LaurentPoly(self.low, [c * other for c in self.coeffs])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return _ZERO
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    out[i + j] += ca * cb
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, t: int) -> "LaurentPoly":
        """Multiply by q**t (every exponent increased by t)."""
        if not self.coeffs:
            return _ZERO
        return LaurentPoly(self.low + t, self.coeffs)

    def divrem(self, other: "LaurentPoly") -> tuple:
        """Exact rational long division for honest polynomials.

        Both operands must have ``low >= 0``; the divisor's leading
        coefficient must be nonzero (it always is, in canonical form).
        Returns (quotient, remainder) with deg(remainder) < deg(divisor).
        """
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.low < 0 or other.low < 0:
            raise ValueError("divrem requires honest polynomials (low >= 0)")
        if self.is_zero:
            return _ZERO, _ZERO
        a = [0] * self.low + list(self.coeffs)
        b = [0] * other.low + list(other.coeffs)
        db = len(b) - 1
        lead = b[-1]
        if len(a) - 1 < db:
            return _ZERO, self
        quo = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            if a[i] == 0:
                continue
            c = Fraction(a[i], 1) / lead if not isinstance(a[i], Fraction) else a[i] / lead
            quo[i - db] = c
            a[i] = 0
            for j in range(db):
                a[i - db + j] -= c * b[j]
        return LaurentPoly(0, quo), LaurentPoly(0, a[:db])

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate at a rational point (x != 0 when low < 0)."""
        if self.low < 0 and x == 0:
            raise ZeroDivisionError("evaluation at 0 with negative exponents")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.low:
            if self.low > 0:
                acc *= x ** self.low
            else:
                acc *= Fraction(1, 1) / Fraction(x) ** (-self.low)
        return acc

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q" if c != 1 else "q")
            else:
                parts.append(f"{c}*q^{e}" if c != 1 else f"q^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x) if x != 0 else _ZERO
    return NotImplemented


_ZERO = LaurentPoly(0, ())
_ONE = LaurentPoly(0, (1,))

#: the variable itself, for building expressions
Q = LaurentPoly.monomial(1)
