"""Dynnikov coordinates and the piecewise-linear braid group action on them."""

from .braid import (
    BandGenerator,
    BandKind,
    BraidWord,
    decompose_into_bands,
    format_word,
    full_twist,
    inverse_word,
    parse_word,
)
from .coords import (
    DynnikovCoordinates,
    IntegralLamination,
    Involution,
    TriangleCoordinates,
    apply_involution,
    dynnikov_to_triangle,
    format_coords,
    lamination,
    parse_coords,
    triangle_to_dynnikov,
)
from .errors import (
    BraidWordError,
    BranchHypothesisError,
    DegenerateCoordinatesError,
    DynnikovError,
    NoRootError,
    NotPseudoAnosovError,
    ParityError,
    StrandMismatchError,
)
from .families import (
    Beta,
    CharacteristicPolynomial,
    Sigma,
    char_poly_eval,
    dilatation,
    family_word,
    reducing_system,
    resolved_beta_action,
    unstable_coords,
)
from .spectral import (
    EntropyReport,
    EntropyStatus,
    OrbitClassification,
    OrbitKind,
    classify_orbit,
    entropy_estimate,
    find_root,
    fixed_point_check,
    projective_eigen_check,
)
from .update import apply_band, apply_signed_generator, apply_word

__version__ = "0.1.0"
