"""
Shearing, convolving and the dilatation
=======================================

Builds the two harmonic maps, convolves them, and checks that the
dilatation of the convolution is the rational function z^n e^{2i theta} p/p*.
"""

import numpy as np

from hcv.harmonic import build_p, convolve, dilatation_pi2, make_F_a, make_f_beta
from hcv.zerolocation import zeros_in_closed_disk

n, a, theta = 3, 0.45, 0.8
order = 400

# F_a: half-plane map sheared with dilatation (a - z)/(1 - a z)
Fa = make_F_a(a, order)
print("F_a   h:", np.round(Fa.analytic.coeffs[:5].real, 6))
print("F_a   g:", np.round(Fa.coanalytic.coeffs[:5].real, 6))

# f_beta with beta = pi/2: strip map sheared with dilatation e^{i theta} z^n
fb = make_f_beta(np.pi / 2, theta, n, order)
print("f     h:", np.round(fb.analytic.coeffs[:5], 6))

# the convolution acts coefficient-wise on each part
conv = convolve(Fa, fb)

# dilatation from the series versus the closed form
z = 0.6 * np.exp(1j * np.linspace(0, 2 * np.pi, 9, endpoint=False))
from_series = conv.coanalytic.derivative()(z) / conv.analytic.derivative()(z)
closed = dilatation_pi2(n, a, theta)(z)
print("max |series - closed form| =", np.max(np.abs(from_series - closed)))

# |omega| < 1 in the disk follows once every zero of p is in the closed disk
p = build_p(n, a, theta)
print("p coefficients:", np.round(p.coeffs, 6))
print("zero location:", zeros_in_closed_disk(p).verdict.value)
r = np.linspace(0.01, 0.999, 64)[:, None] * np.exp(1j * np.linspace(0, 2 * np.pi, 256))[None, :]
print("max sampled |omega| =", float(np.max(np.abs(dilatation_pi2(n, a, theta)(r)))))
