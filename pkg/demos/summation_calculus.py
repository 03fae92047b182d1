"""Summation as a pseudoinverse: Faulhaber, fractional bounds, Euler-Maclaurin.

Every delta operator Q has a unique anchored right inverse with
Q Q^{-1}_{(a)} = 1 and Q^{-1}_{(a)} Q = 1 - Ev_a.  For the derivative this
is integration from a; for the forward difference it is summation from a,
and the formula keeps working when the bounds are not integers.
"""

from fractions import Fraction as F

from umbra import (
    bernoulli2_poly,
    bernoulli_numbers,
    euler_maclaurin_residual,
    faulhaber,
    frac_sum_eval,
    poly,
)

print("Bernoulli numbers:", [str(b) for b in bernoulli_numbers(8)])

print("\nFaulhaber polynomials (three internal routes asserted equal):")
for n in range(4):
    print(f"   sum_k<x k^{n} =", faulhaber(n))

p = poly([0, 0, 1])  # x^2
print("\nsum of squares below 5:", frac_sum_eval(p, 0, 5))
print("the same sum with fractional bounds:")
for x in (F(5), F(11, 2), F(7, 3)):
    print(f"   Sigma_0^{x} x^2 =", frac_sum_eval(p, 0, x))

# anchored sums telescope exactly, whatever the bounds
a, b, c = F(1, 3), F(7, 2), F(-2)
lhs = frac_sum_eval(p, a, b) + frac_sum_eval(p, b, c)
print("   additivity over split bounds:", lhs == frac_sum_eval(p, a, c))

print("\nEuler-Maclaurin residual Sum - Int for x^3 (dual routes asserted):")
print("  ", euler_maclaurin_residual(poly([0, 0, 0, 1]), 0))

print("\nBernoulli polynomials of the second kind (integral of falling factorials):")
for n in range(4):
    print(f"   psi_{n} =", bernoulli2_poly(n))
