"""
Convexity in the horizontal direction
=====================================

The shear construction needs h - g convex in the direction of the real axis.
Counting crossings of horizontal lines with the image of |z| = r shows that
this property of the full disk need not hold for every smaller disk.
"""

import numpy as np

from hcv.verifier import chd_crossings, chd_radius_profile

n, a, theta = 1, 0.8086666666666666, np.pi / 4

count, level = chd_crossings(n, a, theta)
print(f"series image of |z| = 0.99: {count} crossings, worst line y = {level:.6f}")

radii = [0.5, 0.9, 0.95, 0.98, 0.99, 0.995, 0.999, 0.9999]
for r, c in chd_radius_profile(n, a, theta, radii).items():
    print(f"r = {r:<7} max crossings {c}")

# a point well inside the sweep for comparison
print("n = 3, a = 0.5, theta = 0:", chd_crossings(3, 0.5, 0.0)[0], "crossings at r = 0.99")
