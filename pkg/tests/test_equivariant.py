import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import mp_e2
from e2zeros.eisenstein import V0, eval_E2
from e2zeros.equivariant import (
    RHO, STRIP_EPS, elliptic_fixed_point_residuals, eval_h, eval_h_prime, h,
    real_locus_height, scan_derivative_bounds, scan_h_prime, strip_image_height,
)
from e2zeros.errors import VerificationError
from e2zeros.modular import UnimodularMatrix, mobius_apply
from e2zeros.zerofinder import LAMBDA0


def mp_im_h(x, y):
    e2 = mp_e2(complex(x, y))
    return (complex(x, y) - 1j * V0 / e2).imag


def test_h_at_elliptic_points():
    assert abs(h(1j) + 1j) < 1e-10
    assert abs(h(RHO) - RHO.conjugate()) < 1e-10
    assert max(elliptic_fixed_point_residuals()) < 1e-10


def test_h_high_up():
    assert abs(h(30j) - 1j * (30 - V0)) < 1e-12
    assert abs(eval_h_prime(30j) - 1) < 1e-12


def test_h_pole_flag():
    y = 0.5235217000179992
    hv = eval_h(complex(0, y))
    assert hv.value is None and abs(hv.e2) < 1e-13
    with pytest.raises(ZeroDivisionError):
        eval_h_prime(complex(0, y))
    assert eval_h(complex(0, y + 1e-6)).value is not None


def test_h_prime_bound_at_sample_point():
    assert abs(eval_h_prime(0.2 + 1.1j) - 1) < 0.89


@pytest.mark.parametrize("z", [0.1 + 1.3j, -0.3 + 0.95j, 0.45 + V0 * 1j, 0.2 + 0.4j])
def test_h_prime_finite_difference(z):
    step = 1e-6
    fd = (h(z + step) - h(z - step)) / (2 * step)
    assert abs(fd - eval_h_prime(z)) < 1e-7 * max(1, abs(fd))


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.5, 0.5), st.floats(0.2, 3))
def test_h_prime_consistency(x, y):
    z = complex(x, y)
    if abs(eval_E2(z)[0]) <= 0.5:
        return
    step = 1e-6
    fd = (h(z + step) - h(z - step)) / (2 * step)
    assert abs(fd - eval_h_prime(z)) < 1e-6 * max(1, abs(fd))


def test_scan_examples():
    assert scan_h_prime() < 0.89
    assert scan_h_prime(y_range=(1.8, 2.0)) < 0.01
    assert scan_h_prime(x_range=(0, 0), y_range=(30, 30)) < 1e-12


def test_scan_ingredients():
    s = scan_derivative_bounds()
    assert s.points == 101 * 206
    assert s.e2_prime_max < 0.4
    assert s.e2_dev_max <= 0.07


def test_scan_rejects_low_region():
    with pytest.raises(ValueError):
        scan_h_prime(y_range=(0.5, 1.0))
    with pytest.raises(ValueError):
        scan_h_prime(step=0)


@pytest.mark.parametrize("x", [0.0, 0.1, 0.25, 0.37, 0.5, -0.5])
def test_real_locus_is_root_of_im_h(x):
    y = real_locus_height(x)
    # independent sign change of Im h in extended precision
    assert mp_im_h(x, y - 1e-11) < 0 < mp_im_h(x, y + 1e-11)


def test_real_locus_first_order_shape():
    assert real_locus_height(0.0) - V0 == pytest.approx(LAMBDA0, abs=1e-6)
    assert abs(real_locus_height(0.25) - V0) < 1e-7
    # the next correction is about 2 pi lambda0^2 ~ 5e-7
    assert real_locus_height(0.5) - V0 == pytest.approx(-LAMBDA0, abs=1e-6)
    assert real_locus_height(0.0) > V0 > real_locus_height(0.5)


def test_real_locus_in_strip():
    for k in range(1001):
        x = -0.5 + k / 1000
        assert abs(real_locus_height(x) - V0) < STRIP_EPS


@settings(max_examples=50, deadline=None)
@given(st.floats(-0.5, 0.5))
def test_real_locus_even(x):
    assert abs(real_locus_height(x) - real_locus_height(-x)) < 1e-12


def test_real_locus_domain():
    with pytest.raises(ValueError):
        real_locus_height(0.7)


def test_real_locus_no_sign_change(monkeypatch):
    import e2zeros.equivariant as eq
    monkeypatch.setattr(eq, "LOCUS_BRACKET", -0.01)
    with pytest.raises(VerificationError):
        eq.real_locus_height(0.0)


def random_sl2(rng, bound=10):
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c == 1:
            return UnimodularMatrix(a, b, c, d)


def test_equivariance_random():
    rng = random.Random(3)
    worst = 0.0
    for _ in range(200):
        g = random_sl2(rng)
        x = rng.uniform(-0.5, 0.5)
        z = complex(x, rng.uniform(math.sqrt(1 - x * x), 5))
        if abs(eval_E2(z)[0]) < 1e-6 or abs(eval_E2(g(z))[0]) < 1e-6:
            continue
        worst = max(worst, abs(h(g(z)) - mobius_apply(g, h(z))))
    assert worst < 1e-8


def test_equivariance_under_s_at_i():
    s = UnimodularMatrix(0, -1, 1, 0)
    assert abs(mobius_apply(s, h(1j)) - h(1j)) < 1e-10


@settings(max_examples=200)
@given(st.integers(-30, 30), st.integers(-30, 30), st.floats(-3, 3))
def test_strip_image_height(c, d, x):
    if math.gcd(c, d) != 1 or c == 0:
        return
    a = pow(d, -1, abs(c)) if abs(c) > 1 else 0
    g = UnimodularMatrix(a, (a * d - 1) // c, c, d)
    w = g(complex(x, V0))
    assert abs(w.imag - strip_image_height(g, x)) < 1e-12
