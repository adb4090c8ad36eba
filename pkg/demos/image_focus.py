"""Field of a point source along the line through its image point.

A fish-eye lens refocuses rays from ``r'`` at ``-r' rho^2/|r'|^2``. The wave
field stays finite there, yet its magnitude still peaks near the focus.
"""

import numpy as np

from fisheye import Medium, green, image_point
from fisheye.medium import k_from_nu

m = Medium(3, rho=1.0)
src = np.array([0.4, 0.0, 0.0])
# halfway between the resonances 4.5 and 5.5, away from their pole growth
nu = 5.0
img = image_point(m, src)
print(f"nu = {nu}, k = {k_from_nu(m, nu).real:.6f}, image point x = {img[0]:.4f}")

for x in np.linspace(-4.0, -0.5, 15):
    g = green(m, nu, [x, 0.0, 0.0], src)
    print(f"x = {x:7.3f}  |G| = {abs(g.value):.6e}  {sorted(f.value for f in g.flags)}")
