"""
Cyclotomic polynomials and q-combinatorics from scratch
=======================================================

The supporting cast: Phi_n computed by exact division, Gaussian
binomials (including negative and rational upper index), and the two
q-Chu-Vandermonde convolutions that drive the proof-step reductions.
"""

from qcongruence import (
    cyclotomic,
    euler_totient,
    gauss_binomial,
    poch_to_binom_check,
    q_pochhammer,
    qchu_check,
)
from qcongruence.polyring import LaurentPoly

# Phi_n is obtained by dividing q^n - 1 by the product of Phi_d over the
# proper divisors d of n; the division is exact by construction.
for n in (1, 2, 6, 12, 30):
    print(f"Phi_{n}(q) = {cyclotomic(n)}   (degree {euler_totient(n)})")

# The first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
# is Phi_105; the offending coefficient is -2.
phi105 = cyclotomic(105)
idx = phi105.coeffs.index(-2)
print(f"\nPhi_105 has coefficient {phi105.coeffs[idx]} at q^{idx} "
      f"(degree {phi105.degree})")

# Gaussian binomials: polynomials for N >= 0, Laurent polynomials for
# N < 0, all produced by exact division of q-Pochhammer symbols.
print(f"\n[4 choose 2]_q     = {gauss_binomial(4, 2)}")
print(f"[-1 choose 3]_q    = {gauss_binomial(-1, 3)}")
print(f"[-2 choose 2]_q^3  = {gauss_binomial(-2, 2, 3)}")

# At q = 1 they collapse to ordinary binomial coefficients.
print(f"\n[10 choose 4]_q at q=1: {gauss_binomial(10, 4)(1)}")

# q-Pochhammer symbols are plain polynomial products.
print(f"(q; q)_3 = {q_pochhammer(1, 1, 3)}")

# The rewrite connecting Pochhammer ratios to binomials with rational
# upper index, and the two convolution identities, hold exactly:
print(f"\nPochhammer-to-binomial rewrite, d<=4, |r|<=4, k<=6: "
      f"{all(poch_to_binom_check(r, d, k) for d in range(1, 5) for r in range(-4, 5) for k in range(7))}")
print(f"q-Chu-Vandermonde (both forms), n,m <= 5: "
      f"{all(qchu_check(f, n, m, k) for f in (1, 2) for n in range(6) for m in range(6) for k in range(n + m + 1))}")

# Everything above is ordinary exact arithmetic on LaurentPoly objects:
f = LaurentPoly.from_dict({0: 1, 1: 1})           # 1 + q
g = LaurentPoly.from_dict({-1: 1, 0: -2, 2: 3})   # q^-1 - 2 + 3q^2
print(f"\n(1 + q)(q^-1 - 2 + 3q^2) = {f * g}")
