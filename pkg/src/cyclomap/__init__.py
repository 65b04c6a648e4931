"""Cyclotomic-mapping permutation polynomials over small finite fields."""

from .cyclo import CycloSpec, apply_map, canonicalize, coset_index, format_spec, parse_spec, zeta
from .gf_core import FieldCtx, build_field, preset, resolve_field
from .permcheck import count_fixed_points, invert, is_involution, is_permutation
from .polyform import DensePoly, expand, format_poly, interpolate
from .search import PermRecord, SearchQuery, count_summary, enumerate_pps

__all__ = [
    "CycloSpec",
    "DensePoly",
    "FieldCtx",
    "PermRecord",
    "SearchQuery",
    "apply_map",
    "build_field",
    "canonicalize",
    "count_fixed_points",
    "count_summary",
    "coset_index",
    "enumerate_pps",
    "expand",
    "format_poly",
    "format_spec",
    "interpolate",
    "invert",
    "is_involution",
    "is_permutation",
    "parse_spec",
    "preset",
    "resolve_field",
    "zeta",
]
