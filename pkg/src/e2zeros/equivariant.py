"""The equivariant function ``h(z) = z + (6 / pi i) / E2(z)``.

``h(g z) = g h(z)`` for every g in SL2(Z), so ``h`` is infinite exactly at
the zeros of E2 and the zeros correspond to rational values of ``h``.
"""
import cmath
import math
from typing import NamedTuple, Optional

from .eisenstein import V0, eval_E2, eval_E2_prime
from .errors import VerificationError

POLE_THRESHOLD = 1e-13
STRIP_EPS = 0.000283
LOCUS_BRACKET = 0.001
LOCUS_WIDTH = 1e-13

RHO = cmath.exp(2j * math.pi / 3)


class HValue(NamedTuple):
    value: Optional[complex]  # None at a pole
    e2: complex


def eval_h(z):
    e2 = eval_E2(z)[0]
    if abs(e2) < POLE_THRESHOLD:
        return HValue(None, e2)
    return HValue(z - 1j * V0 / e2, e2)


def h(z):
    """Value of ``h`` at ``z``; ``None`` at a zero of E2."""
    return eval_h(z).value


def eval_h_prime(z):
    """``h'(z) = 1 + (6i/pi) E2'(z) / E2(z)^2``."""
    e2 = eval_E2(z)[0]
    if abs(e2) < POLE_THRESHOLD:
        raise ZeroDivisionError(f"h has a pole at {z!r}")
    return 1 + 1j * V0 * eval_E2_prime(z) / (e2 * e2)


class DerivativeScan(NamedTuple):
    h_prime_dev: float  # max |h' - 1|
    e2_prime_max: float  # max |E2'|
    e2_dev_max: float  # max |E2 - 1|
    points: int


def _grid(lo, hi, step):
    n = int(round((hi - lo) / step))
    if n <= 0:
        return [lo]
    return [lo + (hi - lo) * k / n for k in range(n + 1)]


def scan_derivative_bounds(x_range=(-0.5, 0.5), y_range=(0.95, 3.0), step=0.01):
    """Grid maxima of |h' - 1|, |E2'| and |E2 - 1| over a rectangle in y >= .95."""
    if y_range[0] < 0.95:
        raise ValueError("scan region must lie in y >= .95")
    if not step > 0:
        raise ValueError("step must be positive")
    hp = e2p = e2d = 0.0
    count = 0
    for y in _grid(*y_range, step):
        for x in _grid(*x_range, step):
            z = complex(x, y)
            e2 = eval_E2(z)[0]
            dp = eval_E2_prime(z)
            hp = max(hp, abs(1j * V0 * dp / (e2 * e2)))
            e2p = max(e2p, abs(dp))
            e2d = max(e2d, abs(e2 - 1))
            count += 1
    return DerivativeScan(hp, e2p, e2d, count)


def scan_h_prime(x_range=(-0.5, 0.5), y_range=(0.95, 3.0), step=0.01):
    return scan_derivative_bounds(x_range, y_range, step).h_prime_dev


def real_locus_height(x):
    """The height y at which ``Im h(x + iy) = 0`` near ``6/pi``, by bisection."""
    if not -0.5 <= x <= 0.5:
        raise ValueError("x must lie in [-1/2, 1/2]")
    lo, hi = V0 - LOCUS_BRACKET, V0 + LOCUS_BRACKET
    flo = h(complex(x, lo)).imag
    fhi = h(complex(x, hi)).imag
    if not (flo < 0 < fhi):
        raise VerificationError(f"Im h has no sign change on [{lo}, {hi}] at x = {x}")
    while hi - lo > LOCUS_WIDTH:
        mid = 0.5 * (lo + hi)
        if h(complex(x, mid)).imag < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def elliptic_fixed_point_residuals():
    """``|h(i) + i|``, ``|h(rho) - conj(rho)|`` and ``|h(1 - conj(rho)) - (1 - rho)|``."""
    return (
        abs(h(1j) + 1j),
        abs(h(RHO) - RHO.conjugate()),
        abs(h(1 - RHO.conjugate()) - (1 - RHO)),
    )


def strip_image_height(g, x):
    """``Im g(x + 6i/pi)`` from the closed form ``v0 / ((c v0)^2 + (cx + d)^2)``."""
    return V0 / ((g.c * V0) ** 2 + (g.c * x + g.d) ** 2)

