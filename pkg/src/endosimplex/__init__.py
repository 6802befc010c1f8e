"""Simplices in the endomorphism semiring of a finite chain.

Monotone self-maps of the chain {0, ..., n-1} form a semiring under
pointwise max and left-to-right composition.  Fixing a vertex set turns
the maps with image inside it into a simplex: a subsemiring with faces,
an interior and boundary, layered vertex neighborhoods carrying the
one-sided ideal structure, and a type map onto a smaller coordinate
semiring whose closed subsets lift back.  Everything here is exact and
finite, and every structural statement the package exposes can be
machine-checked by the brute-force verification suites.
"""

from .chain import (
    NOTATION_STYLES,
    RUN_LENGTH,
    TUPLE,
    Endo,
    NotationError,
    add,
    all_endos,
    compose,
    constant,
    endo_count,
    format_endo,
    identity,
    make_endo,
    parse_endo,
    power,
)
from .simplex import (
    DEFAULT_ENUM_CAP,
    EndoSet,
    Simplex,
    SizeCapError,
    all_simplices,
    is_internal_face,
)
from .strata import (
    ClosureReport,
    ClosureWitness,
    DnReport,
    NeighborhoodProfile,
    closure_check,
    dn_properties,
    layer,
    neighborhood,
    union_neighborhoods,
)
from .typemap import (
    BlockLabel,
    LeftIdentityReport,
    PartitionChecks,
    PartitionReport,
    catalan,
    classify,
    coordinate_simplex,
    idempotent_count,
    left_identity,
    lift,
    nilpotent_count,
    partition,
    right_identities,
    right_identity_count,
    type_of,
)
from .verify import (
    SUITE_NAMES,
    SUITES,
    Claim,
    ClaimResult,
    VerificationReport,
    run_claim,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "NOTATION_STYLES",
    "RUN_LENGTH",
    "TUPLE",
    "Endo",
    "NotationError",
    "add",
    "all_endos",
    "compose",
    "constant",
    "endo_count",
    "format_endo",
    "identity",
    "make_endo",
    "parse_endo",
    "power",
    "DEFAULT_ENUM_CAP",
    "EndoSet",
    "Simplex",
    "SizeCapError",
    "all_simplices",
    "is_internal_face",
    "ClosureReport",
    "ClosureWitness",
    "DnReport",
    "NeighborhoodProfile",
    "closure_check",
    "dn_properties",
    "layer",
    "neighborhood",
    "union_neighborhoods",
    "BlockLabel",
    "LeftIdentityReport",
    "PartitionChecks",
    "PartitionReport",
    "catalan",
    "classify",
    "coordinate_simplex",
    "idempotent_count",
    "left_identity",
    "lift",
    "nilpotent_count",
    "partition",
    "right_identities",
    "right_identity_count",
    "type_of",
    "SUITE_NAMES",
    "SUITES",
    "Claim",
    "ClaimResult",
    "VerificationReport",
    "run_claim",
    "run_suite",
    "__version__",
]
