"""Congruences of exact rational functions modulo Phi_n(q)^k, plus the
small amount of elementary number theory the statements need.

A congruence f == g (mod Phi_n^k) between QRats with denominators
invertible modulo Phi_n is decided by cross multiplication: the
difference Delta = f.num * den(g) - g.num * den(f) must leave zero
remainder under exact division by the monic polynomial Phi_n^k.  Because
q is a unit modulo Phi_n^k, Delta may first be multiplied by a power of
q to clear negative exponents, and exponents may be folded modulo
(q^n - 1)^k, which Phi_n^k divides; both steps preserve the remainder
being zero and keep every intermediate polynomial small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .cyclotomic import cyclotomic
from .polyring import LaurentPoly
from .qcombinatorics import FactoredDen, QRat


class CongruenceDomainError(ValueError):
    """A precondition violation (not a false verdict)."""


@dataclass(frozen=True)
class Verdict:
    holds: bool
    modulus_power: int
    witness: Optional[LaurentPoly] = None

    def __post_init__(self):
        assert self.holds == (self.witness is None)

    def __bool__(self) -> bool:
        return self.holds


def residue_index(x: Union[int, Fraction], n: int) -> int:
    """The unique a in [0, n) with denominator(x) * a == numerator(x) mod n."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    x = Fraction(x)
    try:
        inv = pow(x.denominator, -1, n)
    except ValueError as exc:
        raise CongruenceDomainError(
            f"denominator {x.denominator} is not invertible modulo {n}") from exc
    return (x.numerator * inv) % n


def is_odd_prime(p: int) -> bool:
    """Deterministic trial division; inputs in scope are tiny."""
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def legendre(m: int, p: int) -> int:
    """Legendre symbol (m | p) by Euler's criterion."""
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    m %= p
    if m == 0:
        return 0
    v = pow(m, (p - 1) // 2, p)
    return 1 if v == 1 else -1


def den_coprime_to_phi(den: FactoredDen, n: int) -> bool:
    """Phi_n divides (1 - q^m) iff n | m, so the check is structural."""
    if n < 1:
        raise ValueError("modulus index must be >= 1")
    return all(m % n != 0 for m in den.factors)


# -- exponent folding modulo (q^n - 1)^k ----------------------------------

def fold_mod_binomial_power(p: LaurentPoly, n: int, k: int) -> LaurentPoly:
    """Reduce p modulo (q^n - 1)^k for k in {1, 2}, returning an honest
    polynomial of degree < k*n.

    Uses q^(a n + b) == q^b (mod q^n - 1) and, writing t = q^n - 1,
    q^(a n + b) == q^b (1 + a t) == q^b ((1 - a) + a q^n) (mod t^2).
    """
    if k == 1:
        out = [0] * n
        for i, c in enumerate(p.coeffs):
            if c:
                out[(p.low + i) % n] += c
        return LaurentPoly(0, out)
    if k == 2:
        out = [0] * (2 * n)
        for i, c in enumerate(p.coeffs):
            if c:
                a, b = divmod(p.low + i, n)
                out[b] += c * (1 - a)
                out[b + n] += c * a
        return LaurentPoly(0, out)
    raise ValueError("folding implemented for modulus powers 1 and 2 only")


def congruent_mod_phi(f: QRat, g: QRat, n: int, k: int) -> Verdict:
    """Decide f == g (mod Phi_n(q)^k)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    for side, name in ((f, "left"), (g, "right")):
        if not den_coprime_to_phi(side.den, n):
            raise CongruenceDomainError(
                f"{name} denominator shares a factor with Phi_{n}")
    delta = f.num * g.den.poly() - g.num * f.den.poly()
    if delta.is_zero:
        return Verdict(True, k)
    if k <= 2:
        delta = fold_mod_binomial_power(delta, n, k)
        if delta.is_zero:
            return Verdict(True, k)
    elif delta.low < 0:
        delta = delta.shift(-delta.low)
    modulus = cyclotomic(n) ** k
    _, rem = delta.divrem(modulus)
    if rem.is_zero:
        return Verdict(True, k)
    return Verdict(False, k, rem)
