"""Exact bracket calculus on the exterior algebra of a Lie-Rinehart pair.

The package builds the exterior algebra of a pair (a commutative coefficient
algebra acted on by a Lie algebra), computes both Schouten-Nijenhuis
brackets and the whole family of higher brackets, and mechanically verifies
the identities they satisfy, in exact rational arithmetic throughout.
"""

from .errors import (
    DegreeUndefinedError,
    MorphismValidationError,
    PairDocumentError,
    ParseError,
    UnsupportedPairError,
)
from .exterior import (
    INHOMOGENEOUS,
    Multivector,
    antisym_degree,
    associated_exterior_morphism,
    embed,
    tensor_degree,
    wedge,
)
from .graded import Permutation, koszul_sign, parity_sign, shuffles
from .linfty import (
    BracketFamily,
    MorphismFamily,
    aggregated_weak_jacobi_residual,
    ce_differential,
    check_linfty_morphism,
    check_weak_jacobi,
    composition_identity_lhs,
    composition_identity_terms,
    injection_family,
    injection_morphism_residual,
    n_bracket,
    natural_injection,
    strict_family,
    weak_jacobi_residual,
)
from .pairs import (
    GradedPairElement,
    LieRinehartPair,
    PairMorphism,
    Vector,
    anchor,
    associated_bracket,
    bracket_vectors,
    check_leibniz,
    check_pair_morphism,
    load_morphism,
    load_pair,
)
from .report import BracketReport
from .scalars import Scalar, parse_fraction
from .schouten import (
    check_antisym_jacobi,
    check_morphism_respects_sn,
    check_poisson,
    check_sym_jacobi,
    decalage_relation,
    sn_antisym,
    sn_antisym_poisson,
    sn_antisym_shuffle,
    sn_sym,
)

__version__ = "0.1.0"
