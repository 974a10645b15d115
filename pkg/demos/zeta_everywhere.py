"""
Riemann zeta off the usual half-planes
======================================

The two log-form integrals cover Re(k) > 1 and Re(k) < 0.  The csch^2
representation covers everything except the pole, including the strip.
"""

from zetasum import zeta_global, zeta_reference, zeta_strip_neg, zeta_strip_pos

# The two half-plane forms agree with the global one where they apply
for k in (2, 3.5 + 1j):
    print(f"k = {k}:  strip_pos {zeta_strip_pos(k).value:.15g}   global {zeta_global(k).value:.15g}")
for k in (-1, -2.5 - 3j):
    print(f"k = {k}:  strip_neg {zeta_strip_neg(k).value:.15g}   global {zeta_global(k).value:.15g}")

# Inside the critical strip only the global form is available
print()
for k in (0.5, 0.25 + 2j, 0.5 + 14.134725141734694j):
    res = zeta_global(k)
    print(f"zeta({k}) = {res.value:.12g}  (err est {res.err_estimate:.1e}, "
          f"series oracle {zeta_reference(k):.12g})")

# Every evaluation carries its own bookkeeping
res = zeta_global(-3 + 0.5j)
print()
print(res)
