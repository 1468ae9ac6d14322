"""Delta-matroid twists, width, minors, obstructions, and certificates."""

from .core import (
    AxiomViolationError,
    DeltaMatroid,
    DeltaMatroidError,
    EmptyFamilyError,
    GroundSetError,
    validate,
)
from .matroids import Matroid, NotAMatroidError, d_min, is_matroid
from .structure import (
    is_twist_matroid_witness,
    is_twist_width_one_witness,
    min_width_twist,
    rough_structure_witnesses,
    twist_width_formula,
)
from .minors import (
    Obstruction,
    are_isomorphic,
    canonical_form,
    catalog,
    d5_family,
    has_minor_isomorphic,
    is_obstructed,
    matroid_twist_obstructions,
)
from .certify import (
    AuxGraph,
    CertificationError,
    HUB,
    MinorWitness,
    TwistWitness,
    build_aux_graph,
    certify,
)
from .enumeration import (
    EnumerationReport,
    count_all,
    enumerate_all,
    sample_with_empty_feasible,
    verify_theorem,
)
from .fileio import ParseError, parse, serialize

__version__ = "0.1.0"

__all__ = [
    "AxiomViolationError",
    "AuxGraph",
    "CertificationError",
    "DeltaMatroid",
    "DeltaMatroidError",
    "EmptyFamilyError",
    "EnumerationReport",
    "GroundSetError",
    "HUB",
    "Matroid",
    "MinorWitness",
    "NotAMatroidError",
    "Obstruction",
    "ParseError",
    "TwistWitness",
    "are_isomorphic",
    "build_aux_graph",
    "canonical_form",
    "catalog",
    "certify",
    "count_all",
    "d5_family",
    "d_min",
    "enumerate_all",
    "has_minor_isomorphic",
    "is_matroid",
    "is_obstructed",
    "is_twist_matroid_witness",
    "is_twist_width_one_witness",
    "matroid_twist_obstructions",
    "min_width_twist",
    "parse",
    "rough_structure_witnesses",
    "sample_with_empty_feasible",
    "serialize",
    "twist_width_formula",
    "validate",
    "verify_theorem",
]
