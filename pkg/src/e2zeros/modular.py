"""Integer SL2(Z) arithmetic, Mobius action and Farey labels.

Finite points are ``complex``; ``None`` stands for the cusp at infinity.
Zero labels are :class:`fractions.Fraction` values ``-d/c`` (the Fraction
keeps them reduced with a positive denominator).
"""
import math
from dataclasses import dataclass
from fractions import Fraction

BOUNDARY_TOL = 1e-12
MAX_REDUCTION_STEPS = 10**4
MAX_DENOMINATOR = 10**6


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer matrix ``(a b; c d)`` with ``ad - bc = 1``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c, self.d):
            if not isinstance(v, int):
                raise TypeError(f"entries must be int, got {v!r}")
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def __matmul__(self, other):
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return UnimodularMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        return UnimodularMatrix(self.d, -self.b, -self.c, self.a)

    def __call__(self, z):
        return mobius_apply(self, z)

    def entries(self):
        return self.a, self.b, self.c, self.d


IDENTITY = UnimodularMatrix(1, 0, 0, 1)
S = UnimodularMatrix(0, -1, 1, 0)
T = UnimodularMatrix(1, 1, 0, 1)


def translation(n):
    return UnimodularMatrix(1, n, 0, 1)


def mobius_apply(g, z):
    """``(az + b) / (cz + d)``, with ``None`` for the point at infinity."""
    a, b, c, d = g.a, g.b, g.c, g.d
    if z is None:
        return None if c == 0 else complex(Fraction(a, c))
    den = c * z + d
    if den == 0:
        return None
    return (a * z + b) / den


def jfactor(g, z):
    """Automorphy factor ``j(g, z) = cz + d``."""
    return g.c * z + g.d


def label_cd(label):
    """``(c, d)`` for the zero label ``-d/c``."""
    label = Fraction(label)
    return label.denominator, -label.numerator


def matrix_from_fraction(c, d):
    """The matrix ``(a b; c d)`` with ``a = d^-1 mod c`` taken in ``[0, c)``.

    Its inverse sends ``a/c + 6i/pi`` to the first-order zero near ``-d/c``.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    if math.gcd(c, d) != 1:
        raise ValueError(f"gcd({c}, {d}) != 1")
    a = pow(d, -1, c) if c > 1 else 0
    b, rem = divmod(a * d - 1, c)
    assert rem == 0
    return UnimodularMatrix(a, b, c, d)


def matrix_for_label(label):
    return matrix_from_fraction(*label_cd(label))


def farey_labels(max_den):
    """All reduced labels ``-d/c`` in ``(-1/2, 1/2]`` with ``c <= max_den``.

    Sorted by denominator, then by value.
    """
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    if max_den > MAX_DENOMINATOR:
        raise ValueError(f"max_den capped at {MAX_DENOMINATOR}")
    out = []
    for c in range(1, max_den + 1):
        # numerators n with -c < 2n <= c
        lo = -((c - 1) // 2)
        for n in range(lo, c // 2 + 1):
            if math.gcd(n, c) == 1:
                out.append(Fraction(n, c))
    return out


def reduce_to_fundamental(z):
    """Find ``g`` with ``g z`` in the closed fundamental domain.

    Returns ``(g, g(z))``.  Alternates translation into ``|x| <= 1/2`` with
    the inversion ``z -> -1/z``; the final point is recomputed from the
    original ``z`` with the exact integer matrix.
    """
    if not z.imag > 0:
        raise ValueError(f"{z!r} is not in the upper half-plane")
    g = IDENTITY
    w = z
    for _ in range(MAX_REDUCTION_STEPS):
        n = math.floor(w.real + 0.5)
        if n:
            g = translation(-n) @ g
            w = w - n
        if abs(w) < 1 - BOUNDARY_TOL:
            g = S @ g
            w = -1 / w
        else:
            break
    else:
        raise ArithmeticError(f"reduction of {z!r} did not terminate")
    return g, mobius_apply(g, z)


def in_fundamental_domain(z, tol=BOUNDARY_TOL):
    return z.imag > 0 and abs(z) >= 1 - tol and abs(z.real) <= 0.5 + tol
