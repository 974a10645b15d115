"""
One finite sum, three shapes
============================

S(k, n) = sum_j (2 pi i n)^(-2j) zeta(2j) / (k - 2j)! written as a finite
sum, as an integral on (0, pi/2), and as its tan-substituted image on (0, inf).
The integral shapes also make sense for non-integer k.
"""

from zetasum import zeta_even_tail

for k in (2, 3, 4, 2.5 + 1j):
    for n in (1, 2, 1 + 1j):
        row = [zeta_even_tail(k, n, form).value for form in ("trig", "rational")]
        if isinstance(k, int):
            row.insert(0, zeta_even_tail(k, n, "finite_sum").value)
        print(f"k={k!s:<7} n={n!s:<7} " + "  ".join(f"{v:.13g}" for v in row))
