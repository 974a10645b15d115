"""
The integrator on its own
=========================

Open tanh-sinh rule with bisection fallback; (0, inf) is cut at a point
chosen from the integrand's decay envelope.
"""

import math

import numpy as np

from zetasum import QuadratureConfig, integrate_finite, integrate_semi_infinite, truncation_point

# An endpoint singularity is no trouble: the endpoints are never sampled
res = integrate_finite(lambda x: x ** -0.5, 0.0, 1.0)
print("int x^-1/2 on (0,1):", res.value, "evals", res.evals_used)

# Decay and growth set the cut-off
for decay, growth in [(2 * math.pi, 0), (1, 4), (20 * math.pi, 0)]:
    print(f"decay {decay:8.4f} growth {growth}: T = {truncation_point(decay, growth):.6f}")

res = integrate_semi_infinite(lambda t: t * np.exp(-2 * t), 2.0, 1.0)
print("int t e^-2t:", res.value, "cut at", res.truncation_point)

# A starved budget is reported, not raised
res = integrate_finite(lambda x: np.exp(1e6j * x), 0.0, 1.0, QuadratureConfig(max_evals=100))
print("oscillatory, 100 evals:", res.converged, res.err_estimate)
