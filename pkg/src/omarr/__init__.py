"""Exact hyperplane arrangements and oriented matroids.

Faces of rational arrangements, covector axioms, chirotopes, canonical forms
under relabeling and reorientation, and enumeration of small affine classes.
"""

from .arrangement import (
    DomainError,
    GeometricFace,
    Hyperplane,
    RationalArrangement,
    bisect,
    cone,
    covectors,
    faces,
    general_position,
    geometric_compose,
    geometric_restrict,
    goodman_pollack8,
    max_chambers,
    max_vertices,
    pappus,
    product_with_axis,
    sign_feasible,
    trivial,
)
from .chirotope import Chirotope, check_chirotope, chirotope_from_vectors, cocircuits_from_chirotope, covectors_from_chirotope
from .formats import ParseError, read_any
from .isomorphism import CanonicalForm, are_equivalent, canonicalize, canonicalize_affine, fingerprint
from .oriented_matroid import AffineOrientedMatroid, CovectorSet, check_axioms, face_poset, loops, parallel_pairs, rank
from .signvec import DimensionError, ResourceError, Sign, SignedPermutation, SignVector, compose, leq, negate, restrict

__version__ = "0.1.0"

__all__ = [
    "AffineOrientedMatroid", "CanonicalForm", "Chirotope", "CovectorSet", "DimensionError", "DomainError",
    "GeometricFace", "Hyperplane", "ParseError", "RationalArrangement", "ResourceError", "Sign",
    "SignVector", "SignedPermutation", "are_equivalent", "bisect", "canonicalize", "canonicalize_affine",
    "check_axioms", "check_chirotope", "chirotope_from_vectors", "cocircuits_from_chirotope", "compose",
    "cone", "covectors", "covectors_from_chirotope", "face_poset", "faces", "fingerprint",
    "general_position", "geometric_compose", "geometric_restrict", "goodman_pollack8", "leq", "loops",
    "max_chambers", "max_vertices", "negate", "pappus", "parallel_pairs", "product_with_axis", "rank",
    "read_any", "restrict", "sign_feasible", "trivial",
]
