# Where h is real
#
# h(z) = z - (6i/pi) / E2(z) commutes with SL2(Z).  Inside the fundamental
# domain the set where h is real is a thin wavy curve hugging y = 6/pi.

import math

from e2zeros import real_locus_height
from e2zeros.eisenstein import V0
from e2zeros.equivariant import STRIP_EPS, elliptic_fixed_point_residuals, h
from e2zeros.zerofinder import LAMBDA0

for x in (0, 0.125, 0.25, 0.375, 0.5):
    y = real_locus_height(x)
    print(f"x = {x:5.3f}   y - 6/pi = {y - V0:+.4e}   lambda0 cos(2 pi x) = {LAMBDA0 * math.cos(2 * math.pi * x):+.4e}")

worst = max(abs(real_locus_height(-0.5 + k / 999) - V0) for k in range(1000))
print(f"\nwidest excursion {worst:.7f}  (strip half-width {STRIP_EPS})")


# The elliptic points are fixed in a twisted way: h(i) = -i and h(rho) = conj(rho).

rho = complex(-0.5, math.sqrt(3) / 2)
print("\nh(i)   =", h(1j))
print("h(rho) =", h(rho), " conj(rho) =", rho.conjugate())
print("residuals:", elliptic_fixed_point_residuals())
