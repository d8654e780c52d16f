"""Hit problem computations for F2[u1, ..., un] over the Steenrod algebra."""

from .dual import DualPolynomial, annihilated_dimension, is_annihilated, pairing, right_sq
from .errors import (
    DegreeMismatch, DegreeWeightMismatch, DimensionMismatch, HitcalcError, IndexOutOfRange,
    MalformedImage, ModeViolation, MuTooLarge, NonHomogeneous, TooLarge,
)
from .estimator import CohitTransformer
from .gf2 import EchelonBasis, kernel_intersection
from .groups import (
    Substitution, induced_operator, invariants, project_p, standard_generators,
    verify_invariant_class,
)
from .hit import (
    CohitBasis, check_direct_sum, cohit_basis, hit_generators, is_hit, reduce_to_admissible,
    split_zero_positive, weight_subquotient,
)
from .kameko import kameko_down, kameko_iso_check, kameko_kernel, kameko_up
from .monomials import (
    alpha, compare, enumerate_monomials, is_minimal_spike, is_spike, minimal_spike, mu,
    weight_vector,
)
from .spaces import kernel_space, quotient_space
from .steenrod import Polynomial, binom_parity, sq, substitute

__all__ = [
    "CohitBasis", "CohitTransformer", "DegreeMismatch", "DegreeWeightMismatch",
    "DimensionMismatch", "DualPolynomial", "EchelonBasis", "HitcalcError", "IndexOutOfRange",
    "MalformedImage", "ModeViolation", "MuTooLarge", "NonHomogeneous", "Polynomial",
    "Substitution", "TooLarge", "alpha", "annihilated_dimension", "binom_parity",
    "check_direct_sum", "cohit_basis", "compare", "enumerate_monomials", "hit_generators",
    "induced_operator", "invariants", "is_annihilated", "is_hit", "is_minimal_spike",
    "is_spike", "kameko_down", "kameko_iso_check", "kameko_kernel", "kameko_up",
    "kernel_intersection", "kernel_space", "minimal_spike", "mu", "pairing", "project_p",
    "quotient_space", "reduce_to_admissible", "right_sq", "split_zero_positive",
    "standard_generators", "sq", "substitute", "verify_invariant_class", "weight_subquotient",
    "weight_vector",
]
