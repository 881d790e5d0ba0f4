"""oggkit: finite ordered Gamma-groupoids with exact-rational fuzzy subsets.

Build and validate small structures, decide every crisp and fuzzy ideal
predicate with deterministic witnesses, compute level cuts and direct
squares, verify the claim registry (T4..C18) instance by instance, and
hunt for counterexamples over bounded enumerations.
"""

from .errors import (
    BadNameError,
    CapExceededError,
    CarrierMismatchError,
    EmptySubsetError,
    IncompatibleError,
    InternalInconsistencyError,
    NotAntisymmetricError,
    OggkitError,
    ParseError,
    SizeLimitError,
    TableIncompleteError,
    ThresholdOutOfRangeError,
    UnknownElementError,
    ValidationError,
)
from .structures import (
    FAIL,
    PASS,
    VACUOUS,
    OrderedGammaGroupoid,
    Verdict,
    is_gamma_semigroup,
    is_ideal,
    is_left_ideal,
    is_prime_subset,
    is_right_ideal,
    is_semiprime_subset,
    validate_structure,
)
from .fuzzy import (
    FuzzySubset,
    as_grade,
    is_fuzzy_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_prime,
    is_fuzzy_right_ideal,
    is_fuzzy_semiprime,
    level_cut,
    membership_image,
    parse_grade,
    prime_ideal_equality,
)
from .product import direct_square, fuzzy_product, pair_name
from .theorems import (
    CLAIM_ORDER,
    CLAIM_SUMMARIES,
    KNOWN_REFUTED,
    LEVEL_KINDS,
    ClaimReport,
    level_characterization,
    verify_all,
    verify_claim,
    verify_product_claim,
)
from .enumeration import (
    Counterexample,
    EnumBounds,
    NotFound,
    enumerate_fuzzy,
    enumerate_posets,
    enumerate_structures,
    hunt,
    trivial_order,
)
from .fileformat import (
    parse_fuzzy,
    parse_structure,
    serialize_fuzzy,
    serialize_structure,
)

__version__ = "0.1.0"

__all__ = [
    "BadNameError",
    "CapExceededError",
    "CarrierMismatchError",
    "EmptySubsetError",
    "IncompatibleError",
    "InternalInconsistencyError",
    "NotAntisymmetricError",
    "OggkitError",
    "ParseError",
    "SizeLimitError",
    "TableIncompleteError",
    "ThresholdOutOfRangeError",
    "UnknownElementError",
    "ValidationError",
    "FAIL",
    "PASS",
    "VACUOUS",
    "OrderedGammaGroupoid",
    "Verdict",
    "is_gamma_semigroup",
    "is_ideal",
    "is_left_ideal",
    "is_prime_subset",
    "is_right_ideal",
    "is_semiprime_subset",
    "validate_structure",
    "FuzzySubset",
    "as_grade",
    "is_fuzzy_ideal",
    "is_fuzzy_left_ideal",
    "is_fuzzy_prime",
    "is_fuzzy_right_ideal",
    "is_fuzzy_semiprime",
    "level_cut",
    "membership_image",
    "parse_grade",
    "prime_ideal_equality",
    "direct_square",
    "fuzzy_product",
    "pair_name",
    "CLAIM_ORDER",
    "CLAIM_SUMMARIES",
    "KNOWN_REFUTED",
    "LEVEL_KINDS",
    "ClaimReport",
    "level_characterization",
    "verify_all",
    "verify_claim",
    "verify_product_claim",
    "Counterexample",
    "EnumBounds",
    "NotFound",
    "enumerate_fuzzy",
    "enumerate_posets",
    "enumerate_structures",
    "hunt",
    "trivial_order",
    "parse_fuzzy",
    "parse_structure",
    "serialize_fuzzy",
    "serialize_structure",
    "__version__",
]
