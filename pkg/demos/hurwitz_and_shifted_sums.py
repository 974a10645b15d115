"""
Hurwitz zeta and shifted power sums
===================================

zeta(k, b) for Re(b) > 0, and sums of (j + b)^k built on top of it.
"""

import math

from zetasum import hp_bruteforce, hp_sum_ac, hp_sum_hurwitz, hurwitz_global, hurwitz_neg_int, zeta_global

# Recurrence: zeta(k, b) - zeta(k, b + 1) = b^-k
k, b = 1.5 + 1j, 0.3
diff = hurwitz_global(k, b).value - hurwitz_global(k, b + 1).value
print(f"zeta(k,b) - zeta(k,b+1) = {diff:.15g}")
print(f"b^-k                    = {b ** -k:.15g}")

# Non-positive integers have a closed form
print()
for m in range(4):
    print(f"zeta(-{m}, 1+i): integral {hurwitz_global(-m, 1 + 1j).value:.14g}   "
          f"closed form {hurwitz_neg_int(m, 1 + 1j):.14g}")

# b = 1/2 relates back to Riemann zeta
print()
print(hurwitz_global(2, 0.5).value, 3 * math.pi**2 / 6, 3 * zeta_global(2).value)

# Shifted sums, starting at j = 1 and at j = 0
print()
k, b, n = 1.5 - 0.5j, 0.7 + 0.2j, 6
print("j = 1..n :", hp_sum_ac(k, b, n).value, hp_bruteforce(k, b, n, start=1))
print("j = 0..n :", hp_sum_hurwitz(k, b, n).value, hp_bruteforce(k, b, n, start=0))
