"""Zeros of the weight two Eisenstein series E2, located through the
equivariant function ``h(z) = z + (6 / pi i) / E2(z)``."""

__version__ = "0.1.0"

from .eisenstein import eval_E2, eval_E2_prime, eval_E2_truncated, eval_E2_via_delta, tail_bound
from .equivariant import eval_h, eval_h_prime, real_locus_height
from .modular import UnimodularMatrix, farey_labels, matrix_from_fraction, mobius_apply
from .zerofinder import LAMBDA0, ZeroRecord, build_catalog, refine_zero
