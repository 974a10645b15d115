"""
Power sums for complex exponents
================================

sum_{j<=n} j^k for any complex k except -1, compared with direct summation.
"""

from zetasum import faulhaber_bernoulli_odd, powersum_ac, powersum_ac_alt, powersum_bruteforce

# Integer and odd powers: the Bernoulli polynomial is exact
print("sum j^5, j<=4 :", faulhaber_bernoulli_odd(5, 4, exact=True))
print("sum j^3, j<=10:", powersum_ac(3, 10).value)

# Negative, fractional and complex exponents
print()
print(f"{'k':>10} {'n':>4} {'csch^2 form':>40} {'exp form':>40} {'direct':>40}")
for k, n in [(-2, 3), (0.5, 4), (-0.5, 10), (2 + 1j, 7), (3.14159, 12)]:
    a = powersum_ac(k, n).value
    b = powersum_ac_alt(k, n).value
    c = powersum_bruteforce(k, n)
    print(f"{k!s:>10} {n:>4} {a:>40.15g} {b:>40.15g} {c:>40.15g}")

# The harmonic point is refused rather than extrapolated
try:
    powersum_ac(-1, 5)
except ValueError as exc:
    print()
    print("k = -1:", exc)
