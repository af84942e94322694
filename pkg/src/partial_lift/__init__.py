"""Partially lifted bivariate polynomial codes over GF(2^ell) with disjoint repair groups."""

from .counting import (
    TripleCounts,
    brute_valid_pairs,
    brute_valid_triples,
    growth_check,
    pairs_bound,
    recurse_counts,
)
from .descriptor import CodeDescriptor
from .field import FieldSpec, make_field, subgroup
from .lift import (
    ClassIndex,
    PartialLiftCode,
    build_basis,
    class_index,
    e_st,
    eij_table,
    exact_dimension,
    generator_matrix,
    verify_basis,
)
from .lines import LineFamily, SimpleLine, family, lines_through, points_of
from .monomial import BasisPoly, Monomial, count_good, is_good, leading_coeff, restrict
from .parity import binom_parity, shadow_leq
from .repair import (
    DrgpReport,
    RepairGroup,
    min_drgp,
    repair_groups,
    repair_value,
    simulate_erasures,
)

__all__ = [
    "BasisPoly",
    "ClassIndex",
    "CodeDescriptor",
    "DrgpReport",
    "FieldSpec",
    "LineFamily",
    "Monomial",
    "PartialLiftCode",
    "RepairGroup",
    "SimpleLine",
    "TripleCounts",
    "binom_parity",
    "brute_valid_pairs",
    "brute_valid_triples",
    "build_basis",
    "class_index",
    "count_good",
    "e_st",
    "eij_table",
    "exact_dimension",
    "family",
    "generator_matrix",
    "growth_check",
    "is_good",
    "leading_coeff",
    "lines_through",
    "make_field",
    "min_drgp",
    "pairs_bound",
    "points_of",
    "recurse_counts",
    "repair_groups",
    "repair_value",
    "restrict",
    "shadow_leq",
    "simulate_erasures",
    "subgroup",
    "verify_basis",
]
