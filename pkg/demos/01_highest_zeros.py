# Zeros of E2, starting from the top
#
# E2 vanishes once on the imaginary axis and once on Re z = -1/2.  Both are
# real-valued lines for E2, so plain bisection finds them.

from fractions import Fraction

from e2zeros import eval_E2, refine_zero
from e2zeros.zerofinder import (
    predicted_zero_first, predicted_zero_second, zero_on_half_line,
    zero_on_imaginary_axis,
)

y1 = zero_on_imaginary_axis()
y2 = zero_on_half_line()
print("zero on the imaginary axis   y =", repr(y1))
print("zero on Re z = -1/2          y =", repr(y2))
print("ratio of heights               =", y1 / y2)


# Every other zero is labelled by a reduced fraction -d/c.  The refined zero
# comes from solving h(tau) = a/c near height 6/pi and pulling back.

print()
print(f"{'label':>6} {'refined zero':>42} {'|E2|':>9} {'iters':>5}")
for lab in (Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(-1, 4),
            Fraction(-1, 5), Fraction(-2, 5)):
    rec = refine_zero(lab)
    z = rec.refined
    print(f"{str(lab):>6} {z.real:20.16f} {z.imag:+20.17f}i {abs(eval_E2(z)[0]):9.1e} {rec.newton_iters:5d}")


# Two closed-form predictions.  The first is the top of a circle tangent to
# the real line at -d/c; the second adds the q^1 correction and gains about
# three digits.

print()
for lab in (Fraction(-1, 3), Fraction(-2, 7)):
    rec = refine_zero(lab)
    p1, p2 = predicted_zero_first(lab), predicted_zero_second(lab)
    print(f"label {lab}:  |z - first| = {abs(rec.refined - p1):.2e}"
          f"   |z - second| = {abs(rec.refined - p2):.2e}")
