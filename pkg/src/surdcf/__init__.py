"""Exact periodic continued fractions of quadratic surds.

Expansion engine, continuant identities, half-period structure,
theorem-scan predicates, Friesen continued-fraction families, and the
L-function period-length bound for real quadratic fields.
"""

from .cf import (
    Convergent,
    QuadraticSurd,
    SqrtExpansion,
    convergents,
    expand_sqrt,
    expand_surd,
    expansion_record,
    norm_identity_check,
    occurrence_count,
    step,
)
from .continuant import (
    ContinuantMatrix,
    continuant,
    determinant_check,
    matrix_product,
    reversal_check,
)
from .errors import InternalConsistencyError, PrecisionError, TheoremFalsified
from .kernel import (
    PrimeRange,
    is_prime,
    is_squarefree,
    isqrt,
    kronecker,
    primes_between,
)

__all__ = [
    "Convergent",
    "ContinuantMatrix",
    "InternalConsistencyError",
    "PrecisionError",
    "PrimeRange",
    "QuadraticSurd",
    "SqrtExpansion",
    "TheoremFalsified",
    "continuant",
    "convergents",
    "determinant_check",
    "expand_sqrt",
    "expand_surd",
    "expansion_record",
    "is_prime",
    "is_squarefree",
    "isqrt",
    "kronecker",
    "matrix_product",
    "norm_identity_check",
    "occurrence_count",
    "primes_between",
    "reversal_check",
    "step",
]

__version__ = "0.1.0"
