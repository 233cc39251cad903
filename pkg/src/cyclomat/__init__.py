"""Exact enumeration and classification of cyclotomic matrices over real quadratic rings."""
from .ring import RingElement, RingId, admissible_entries, parse_element
from .spectral import CharPoly, SymMatrix, char_poly, eigen_check, in_s, in_sprime, interlaces, roots_in_pm2
from .graph import (
    CanonicalKey,
    RGraph,
    canonical,
    canonical_form,
    dominates,
    equivalent,
    is_galois_invariant,
    is_strongly_equivalent,
    sqrt2_cycle_parity_ok,
    switch,
)
from .enumeration import (
    EnumerationLevel,
    MaximalityReport,
    enumerate_sprime,
    maximality_report,
    mixed_seed_closure,
    table1,
)
from .catalog import FamilySpec, build_family, match_family, verify_catalog
from .io import GraphDocument, parse, serialize, to_dot

__all__ = [
    "RingElement", "RingId", "admissible_entries", "parse_element",
    "CharPoly", "SymMatrix", "char_poly", "eigen_check", "in_s", "in_sprime", "interlaces", "roots_in_pm2",
    "CanonicalKey", "RGraph", "canonical", "canonical_form", "dominates", "equivalent",
    "is_galois_invariant", "is_strongly_equivalent", "sqrt2_cycle_parity_ok", "switch",
    "EnumerationLevel", "MaximalityReport", "enumerate_sprime", "maximality_report", "mixed_seed_closure", "table1",
    "FamilySpec", "build_family", "match_family", "verify_catalog",
    "GraphDocument", "parse", "serialize", "to_dot",
]
