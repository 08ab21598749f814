"""
Certifying the zeros of p
=========================

Schur-Cohn minors of p against their closed forms, and the Cohn chain on a
degenerate branch where p has zeros on the unit circle.
"""

import numpy as np

from hcv.cpoly import find_roots
from hcv.harmonic import ThetaClass, build_p, special_case_polys
from hcv.verifier import L, case_for, closed_form_minor, interior_minor, numeric_minor
from hcv.zerolocation import cohn_chain, schur_cohn_minors

n, a, theta = 7, 0.8, 1.3
p = build_p(n, a, theta)
rep = schur_cohn_minors(p)
print("all minors positive:", rep.all_positive, " max |root| =", find_roots(p).max_modulus)

# interior minors: the product of the diagonal depends on the parity of k
print(" k   numeric          k-parity form    n-parity form    diff / L_k")
for k in range(1, n + 1):
    num = numeric_minor(n, a, theta, k)
    by_k = interior_minor(n, k, a)
    by_n = closed_form_minor(case_for(n, k), n, a, theta)
    print(f"{k:2d}   {num:.9e}  {by_k:.9e}  {by_n:.9e}  {(by_n - num) / L(n, a, k):+.3f}")
for k in (n + 1, n + 2):
    print(f"{k:2d}   {numeric_minor(n, a, theta, k):.9e}  "
          f"closed form {closed_form_minor(case_for(n, k), n, a, theta):.9e}")

# theta = pi with n/2 even: z^2 + 1 divides p, and the chain on the cofactor
# ends in a multiple of (n-1) z^2 - 1
n, a = 8, 0.85
factor, cof = special_case_polys(n, a, np.pi, ThetaClass.ODD_PI)
v = cohn_chain(cof)
print("\ncofactor verdict:", v.verdict.value, " chain degrees:", [q.degree for q in v.chain])
last = v.chain[-1]
print("final quadratic / lead:", np.round(last.coeffs / last.lead, 12))
print("its roots:", np.sort(find_roots(last).roots.real), " +-1/sqrt(n-1) =", 1 / np.sqrt(n - 1))
