"""Certified evaluation and bound verification for C_nu/(2nu+1).

C_nu is the supremum over t in (0, 1] of

    |1 - (-1)^nu T_{2nu+1}(sqrt t) / ((2nu+1) sqrt t)| / sqrt t

where T_k are the Chebyshev polynomials of the first kind.  The package
computes the ratio C_nu/(2nu+1) to a requested number of digits using exact
critical-point isolation, and checks every numeric step of the argument that
1/4 <= C_nu/(2nu+1) <= 4/9.
"""

from chebbound.numerics import DEFAULT_PRECISION, PrecisionError, round_decimal, sqrt_ext
from chebbound.polynomial import IntPolynomial
from chebbound.chebyshev import (
    cheb_eval_clenshaw,
    cheb_eval_recurrence,
    cheb_eval_trig,
    cheb_expand,
    odd_cheb_bound,
)
from chebbound.decomposition import DecompTriple, build_decomposition
from chebbound.supremum import SupResult, compute_sup, grid_oracle, lower_bound_witness
from chebbound.certificate import BoundCertificate, minimize_U, u_functions, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRECISION",
    "PrecisionError",
    "round_decimal",
    "sqrt_ext",
    "IntPolynomial",
    "cheb_eval_clenshaw",
    "cheb_eval_recurrence",
    "cheb_eval_trig",
    "cheb_expand",
    "odd_cheb_bound",
    "DecompTriple",
    "build_decomposition",
    "SupResult",
    "compute_sup",
    "grid_oracle",
    "lower_bound_witness",
    "BoundCertificate",
    "minimize_U",
    "u_functions",
    "verify_theorem",
]
