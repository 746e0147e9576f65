"""Certified zeros of E2.

Each reduced label ``-d/c`` in ``[-1/2, 1/2]`` has one zero.  It is found by
solving ``h(tau) = a/c`` with Newton's method near ``a/c + 6i/pi`` (where the
q-series needs only a handful of terms and ``h`` is nearly the identity
shifted by ``-6i/pi``) and mapping ``tau`` back with ``g^-1``, where
``g = (a b; c d)``.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .eisenstein import V0, eval_E2
from .equivariant import STRIP_EPS, eval_h_prime, h
from .errors import ConvergenceError, VerificationError
from .modular import UnimodularMatrix, farey_labels, label_cd, matrix_from_fraction

LAMBDA0 = 24 * V0 * math.exp(-2 * math.pi * V0)

NEWTON_TOL = 1e-13
NEWTON_MAX_ITER = 50
STRIP_POINT_TOL = 1e-12
BISECTION_WIDTH = 1e-13


@dataclass(frozen=True)
class Constants:
    v0: float = V0
    lambda0: float = LAMBDA0
    strip_eps: float = STRIP_EPS


CONSTANTS = Constants()


@dataclass(frozen=True)
class ZeroRecord:
    label: Fraction
    matrix: UnimodularMatrix
    predicted1: complex
    predicted2: complex
    refined: complex
    strip_point: complex
    residual: float
    residual_bound: float
    theta_scaled: float
    newton_iters: int

    @property
    def c(self):
        return self.matrix.c

    @property
    def d(self):
        return self.matrix.d


class NewtonResult(NamedTuple):
    point: complex
    iterations: int
    residual: float


def predicted_zero_first(label):
    """``-d/c + i / (c^2 v0)``: the top of the circle tangent to R at ``-d/c``."""
    c, d = label_cd(label)
    return complex(-d / c, 1 / (c * c * V0))


def predicted_zero_second(label, g=None):
    """First-order prediction corrected by the ``q^1`` term of E2."""
    c, d = label_cd(label)
    if g is None:
        g = matrix_from_fraction(c, d)
    t = 2 * math.pi * g.a / c
    x = -d / c + LAMBDA0 * math.sin(t) / (c * c * V0 * V0)
    y = (1 - LAMBDA0 / V0 * math.cos(t)) / (c * c * V0)
    return complex(x, y)


def solve_h_equals(target):
    """Solve ``h(tau) = target`` by undamped Newton from ``target + 6i/pi``.

    The target is shifted into ``(-1/2, 1/2]`` for the iteration and the
    solution is shifted back, using ``h(z + 1) = h(z) + 1``.
    """
    target = Fraction(target)
    shift = math.ceil(target - Fraction(1, 2))
    t = float(target - shift)
    tau = complex(t, V0)
    for it in range(NEWTON_MAX_ITER + 1):
        r = h(tau) - t
        if abs(r) < NEWTON_TOL:
            break
        if it == NEWTON_MAX_ITER:
            raise ConvergenceError(f"h(tau) = {target} not solved in {NEWTON_MAX_ITER} steps")
        tau -= r / eval_h_prime(tau)
    tau += shift
    res = abs(h(tau) - float(target))
    if not res < STRIP_POINT_TOL:
        raise ConvergenceError(f"|h(tau) - {target}| = {res:.3g}")
    return NewtonResult(tau, it, res)


def refine_zero(label):
    """Locate and certify the zero of E2 labelled by ``-d/c``."""
    label = Fraction(label)
    if abs(label) > Fraction(1, 2):
        raise ValueError(f"label {label} outside [-1/2, 1/2]")
    c, d = label_cd(label)
    g = matrix_from_fraction(c, d)
    sol = solve_h_equals(Fraction(g.a, c))
    z0 = g.inverse()(sol.point)
    p1 = predicted_zero_first(label)
    p2 = predicted_zero_second(label, g)
    theta = abs(z0 - p1) * (c * V0) ** 2
    residual, bound = eval_E2(z0)
    rec = ZeroRecord(label, g, p1, p2, z0, sol.point, abs(residual), bound, theta, sol.iterations)
    _certify(rec)
    return rec


def _certify(rec):
    if not rec.theta_scaled < STRIP_EPS:
        raise VerificationError(
            f"zero for {rec.label}: theta = {rec.theta_scaled:.6g} >= {STRIP_EPS}")
    if not rec.residual < 1e-9 + 10 * rec.residual_bound:
        raise VerificationError(
            f"zero for {rec.label}: |E2| = {rec.residual:.3g} exceeds tolerance")
    z = rec.refined
    if not (z.imag > 0 and -0.5 - 1e-12 <= z.real <= 0.5 + 1e-12):
        raise VerificationError(f"zero for {rec.label} left the strip: {z}")


def _bisect(f, lo, hi, width=BISECTION_WIDTH):
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo < 0) == (fhi < 0):
        raise VerificationError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if (f(mid) < 0) == (flo < 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def zero_on_imaginary_axis():
    """Height of the unique zero of the real function ``y -> E2(iy)``."""
    return _bisect(lambda y: eval_E2(complex(0, y))[0].real, 0.3, 1.0)


def zero_on_half_line():
    """Height of the zero of E2 on ``Re z = -1/2``."""
    return _bisect(lambda y: eval_E2(complex(-0.5, y))[0].real, 0.05, 0.3)


def catalog_max_den(min_height):
    return math.ceil(math.sqrt(1 / (min_height * V0))) + 1


def build_catalog(max_den=None, min_height=None):
    """Refine one zero per Farey label, highest zero first.

    Give exactly one of ``max_den`` or ``min_height``.  With ``min_height``
    the denominators needed are inferred from ``Im z ~ 1/(c^2 v0)`` and
    zeros below the height are dropped.
    """
    if (max_den is None) == (min_height is None):
        raise ValueError("give exactly one of max_den and min_height")
    if min_height is not None:
        if not min_height > 0:
            raise ValueError("min_height must be positive")
        max_den = catalog_max_den(min_height)
    records = [refine_zero(lab) for lab in farey_labels(max_den)]
    if min_height is not None:
        records = [r for r in records if r.refined.imag >= min_height]
    records.sort(key=lambda r: (-r.refined.imag, r.refined.real))
    return records
