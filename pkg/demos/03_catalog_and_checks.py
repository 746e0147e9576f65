# A full catalog, and the numerical checks behind it

import time

from e2zeros import build_catalog
from e2zeros.verify import ratio_report, run_checks, strip_bound_chain

t = time.perf_counter()
catalog = build_catalog(50)
print(f"{len(catalog)} zeros with c <= 50 in {time.perf_counter() - t:.2f} s")
print("largest scaled deviation from the first prediction:",
      max(r.theta_scaled for r in catalog))


# Heights relative to the top zero are close to, but just under, perfect squares.

for row in ratio_report(catalog)[:8]:
    print(f"  {str(row.label):>5}  {row.ratio:10.5f}  vs {row.square:3d}")


# The strip bound, iterated: each step feeds a better height back into the
# tail estimate for |E2 - 1|.

print()
for it in strip_bound_chain():
    print(f"step {it.step}: |E2 - 1| < {it.e2_minus_1_bound:.3g}  ->  |y - 6/pi| < {it.y_deviation_bound:.4g}"
          f"  (N = {it.n_terms_used})")


# Everything at once; this is what `e2zeros verify --all` prints.

print()
report = run_checks("all")
for c in report.checks:
    print(f"{'PASS' if c.passed else 'FAIL'}  {c.name:26s} {c.measured:.4g} {c.relation} {c.threshold:.4g}")
