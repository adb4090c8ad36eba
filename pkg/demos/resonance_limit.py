"""Approach to a resonant degree and the generalized function left behind.

Near nu_n = n + N/2 - 1 the Green's function has a simple pole in the
eigenvalue lambda = (nu - nu_n)(nu + n + N/2). The degree derivative of
lambda G at nu_n, divided by d lambda/d nu = 2n + N - 1, is the generalized
Green's function; central differences converge to it as eps^2.
"""

import numpy as np

from fisheye import Medium, green, green_generalized

m = Medium(3)
n = 1
N = m.dim
nu_n = n + N / 2 - 1
r, src = np.array([0.3, 0.5, -0.2]), np.array([-0.1, 0.2, 0.4])


def lam_g(nu):
    return (nu - nu_n) * (nu + n + N / 2) * green(m, nu, r, src).value


target = green_generalized(m, n, r, src).value.real
print(f"closed form         {target:+.12f}")
for eps in (1e-1, 1e-2, 1e-3, 1e-4):
    est = ((lam_g(nu_n + eps) - lam_g(nu_n - eps)) / (2 * eps * (2 * n + N - 1))).real
    print(f"eps = {eps:.0e}  estimate {est:+.12f}  error {abs(est - target):.2e}")
