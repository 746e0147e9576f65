"""Fourier evaluation of the weight two Eisenstein series E2.

Points of the upper half-plane are plain Python ``complex`` values; the cusp
is represented by ``None`` (see :mod:`e2zeros.modular`).

E2 has the q-expansion ``1 - 24 * sum sigma_1(n) q^n`` with ``q = exp(2 pi i z)``.
Points below the bottom of the fundamental domain are never summed directly:
they are moved into the fundamental domain and the quasimodular
transformation law is inverted.
"""
import cmath
import math
from dataclasses import dataclass

SQRT3_2 = math.sqrt(3) / 2
TWO_PI = 2 * math.pi
V0 = 6 / math.pi

DEFAULT_EPS = 1e-16
MAX_TERMS = 10**6
DELTA_STEP = 1e-6

# relative slack on the y >= sqrt(3)/2 hypothesis, for points reduced onto
# the bottom arc of the fundamental domain
_HEIGHT_SLACK = 1e-10

_sigma_cache = [0, 1]


@dataclass(frozen=True)
class TruncationPlan:
    terms: int
    min_height: float
    guaranteed_tail: float


def sigma1_table(n_max):
    """Return ``[sigma_1(1), ..., sigma_1(n_max)]`` via a divisor sieve."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    table = [0] * (n_max + 1)
    for a in range(1, n_max + 1):
        for m in range(a, n_max + 1, a):
            table[m] += a
    return table[1:]


def _sigma(n_max):
    # shared, grow-only copy of the sieve indexed from 0
    global _sigma_cache
    if len(_sigma_cache) <= n_max:
        _sigma_cache = [0] + sigma1_table(max(n_max, 2 * len(_sigma_cache)))
    return _sigma_cache


def _check_height(y):
    if not y >= SQRT3_2 * (1 - _HEIGHT_SLACK):
        raise ValueError(f"height {y!r} is below sqrt(3)/2")


def tail_bound(n_terms, y):
    """Bound on |E2(z) - (N-term truncation)| valid for every z with Im z >= y.

    Obtained from sigma_1(n) <= n^2 and the integral test.  Requires
    ``y >= sqrt(3)/2``.
    """
    _check_height(y)
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    L = TWO_PI * y
    N = n_terms
    return 24 * math.exp(-L * N) * (N * N / L + 2 * N / L**2 + 2 / L**3)


def global_bound(y):
    """Bound on |E2(z) - 1| for Im z >= y: the N = 1 tail plus the n = 1 term."""
    _check_height(y)
    L = TWO_PI * y
    return 24 * math.exp(-L) * (1 + 1 / L + 2 / L**2 + 2 / L**3)


def plan_truncation(y_min, target_eps=DEFAULT_EPS):
    """Smallest N with ``tail_bound(N, y_min) <= target_eps``.

    Doubles N until the bound is met, then bisects.  N is capped at
    ``MAX_TERMS``.
    """
    _check_height(y_min)
    if not target_eps > 0:
        raise ValueError("target_eps must be positive")
    hi = 1
    while tail_bound(hi, y_min) > target_eps:
        hi *= 2
        if hi > MAX_TERMS:
            if tail_bound(MAX_TERMS, y_min) > target_eps:
                raise ValueError(f"tolerance {target_eps!r} unattainable with {MAX_TERMS} terms")
            hi = MAX_TERMS
            break
    lo = hi // 2  # bound fails at lo (or lo == 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail_bound(mid, y_min) <= target_eps:
            hi = mid
        else:
            lo = mid
    return TruncationPlan(hi, y_min, tail_bound(hi, y_min))


def eval_E2_truncated(z, n_terms):
    """``1 - 24 * sum_{n <= N} sigma_1(n) q^n``, summed in ascending n."""
    sig = _sigma(n_terms)
    q = cmath.exp(2j * math.pi * z)
    qn = 1
    s = 0
    for n in range(1, n_terms + 1):
        qn *= q
        s += sig[n] * qn
    return 1 - 24 * s


def eval_E2_prime(z, n_terms=None):
    """Derivative of E2.

    With ``n_terms`` given this is the truncated series
    ``-48 pi i * sum_{n <= N} n sigma_1(n) q^n``.  Otherwise the length is
    planned from ``Im z``, and points below ``sqrt(3)/2`` go through the
    derivative of the transformation law.
    """
    if n_terms is not None:
        return _e2_prime_series(z, n_terms)
    if z.imag >= SQRT3_2:
        return _e2_prime_series(z, plan_truncation(z.imag).terms + 2)
    from .modular import reduce_to_fundamental

    g, w = reduce_to_fundamental(z)
    c, d = g.c, g.d
    j = c * z + d
    ew = _eval_high(w)[0]
    e2 = (ew + V0 * 1j * c * j) / (j * j)
    dw = _e2_prime_series(w, plan_truncation(max(w.imag, SQRT3_2)).terms + 2)
    # d/dz [E2(gz)] = j^2 E2'(z) + 2 c j E2(z) - (6/pi) i c^2
    return (dw / (j * j) - 2 * c * j * e2 + V0 * 1j * c * c) / (j * j)


def _e2_prime_series(z, n_terms):
    sig = _sigma(n_terms)
    q = cmath.exp(2j * math.pi * z)
    qn = 1
    s = 0
    for n in range(1, n_terms + 1):
        qn *= q
        s += n * sig[n] * qn
    return -48j * math.pi * s


def e2_prime_majorant(y, n_terms=100):
    """``48 pi * sum_{n <= N} n sigma_1(n) exp(-2 pi n y)``, bounding |E2'| on Im z = y."""
    sig = _sigma(n_terms)
    r = math.exp(-TWO_PI * y)
    return 48 * math.pi * sum(n * sig[n] * r**n for n in range(1, n_terms + 1))


def _eval_high(z):
    y = z.imag
    plan = plan_truncation(max(y, SQRT3_2))
    return eval_E2_truncated(z, plan.terms), plan.guaranteed_tail


def eval_E2(z):
    """Evaluate E2 at ``z`` in the upper half-plane.

    Returns ``(value, error_bound)``.  For ``Im z < sqrt(3)/2`` the point is
    reduced to ``w = g z`` in the fundamental domain and

        E2(z) = (E2(w) + (6/pi) i c j) / j**2,   j = c z + d,

    so the error bound is the truncation bound at ``w`` scaled by ``|j|**-2``
    plus a rounding estimate for the correction term, which dominates near
    the real axis.
    """
    # imported here: modular imports this module's constants
    from .modular import reduce_to_fundamental

    if z.imag <= 0:
        raise ValueError(f"{z!r} is not in the upper half-plane")
    if z.imag >= SQRT3_2:
        return _eval_high(z)
    g, w = reduce_to_fundamental(z)
    ew, tail = _eval_high(w)
    c, d = g.c, g.d
    j = c * z + d
    corr = V0 * 1j * c * j
    value = (ew + corr) / (j * j)
    jj = abs(j) ** 2
    rounding = 8 * 2.0**-52 * (abs(ew) + V0 * abs(c) * (abs(c * z) + abs(d)))
    return value, (tail + rounding) / jj


def delta(z, n_terms=None):
    """Ramanujan's discriminant ``q * prod_{n <= N} (1 - q^n)^24``."""
    if n_terms is None:
        n_terms = plan_truncation(max(z.imag, SQRT3_2), 1e-20).terms
    q = cmath.exp(2j * math.pi * z)
    prod = 1
    qn = 1
    for _ in range(n_terms):
        qn *= q
        prod *= (1 - qn) ** 24
    return q * prod


def eval_E2_via_delta(z, step=DELTA_STEP):
    """E2 as ``(1 / 2 pi i) * Delta'/Delta`` with a central difference for Delta'.

    An independent route to E2 used only as a cross-check; valid for
    ``Im z >= sqrt(3)/2``.
    """
    _check_height(z.imag)
    n = plan_truncation(max(z.imag, SQRT3_2), 1e-20).terms
    d0 = delta(z, n)
    if d0 == 0:
        raise ValueError(f"Delta underflows at {z!r}")
    dp = (delta(z + step, n) - delta(z - step, n)) / (2 * step)
    return dp / d0 / (2j * math.pi)
