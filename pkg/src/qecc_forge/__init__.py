"""Quantum error-correcting codes from Boolean functions and commuting projectors."""

from .boolfn import BooleanFunction
from .codebook import FamilySpec, extend_k2, make, shrink_M
from .exactmat import ExactMatrix
from .oqec import OqecCode, build_oqec, certify_oqec
from .pauli import PauliElement
from .projlogic import ProjectorFamily, evaluate
from .qecc import (
    CodeCandidate,
    CodeCertificate,
    FailureReport,
    build_projector,
    conjugate_correspondence_check,
    distance_oracle,
    extract_stabilizers,
    verify,
)
from .search import SearchSpec, search_codes, search_columns
from .symplectic import SymplecticMatrix

__all__ = [
    "BooleanFunction",
    "CodeCandidate",
    "CodeCertificate",
    "ExactMatrix",
    "FailureReport",
    "FamilySpec",
    "OqecCode",
    "PauliElement",
    "ProjectorFamily",
    "SearchSpec",
    "SymplecticMatrix",
    "build_oqec",
    "build_projector",
    "certify_oqec",
    "conjugate_correspondence_check",
    "distance_oracle",
    "evaluate",
    "extend_k2",
    "extract_stabilizers",
    "make",
    "search_codes",
    "search_columns",
    "shrink_M",
    "verify",
]
