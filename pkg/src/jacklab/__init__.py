"""jacklab: exact Jack polynomials, their Schur coefficients in binomial
bases, and an executable registry of the surrounding identities."""

from .errors import (
    DegreeOverflowError,
    DomainError,
    InternalInconsistencyError,
    JacklabError,
    NotInSpanError,
    ResourceError,
)
from .exactmath import (
    AlphaPoly,
    Rat,
    RatFun,
    binomial_shift_expand,
    falling_factorial_expand,
    poly_eval,
    real_roots_only,
    reciprocal_transform,
)
from .jack import JackExpansion, a_coeffs, b_coeffs, jack_J, jack_tilde, schur_coeff
from .partitions import conjugate, dominates, partitions_of
from .symfunc import QSymFun, SymFun, convert
from .verify import run_check

__version__ = "0.1.0"
