"""List decoding of folded Reed-Solomon codes by affine-subspace pruning."""

from .detprune import det_prune, heavy_hitters
from .errors import FrsError
from .expander import build_expander, second_eigenvalue
from .frs import FoldedWord, FrsParams, corrupt, decoding_radius, encode, folded_distance
from .gf import FieldElement, PrimeField, field_arith, primitive_element
from .harness import brute_force_list, decode_end_to_end
from .interp import find_container, harness_container
from .poly import Polynomial, eval_geometric, evaluate
from .randprune import FAIL, dimension_profile, krsw_prune, rand_decode, rand_prune_once
from .subspace import EMPTY, AffineSubspace, canonical_key, condition, enumerate_points, intersect

__all__ = [
    "EMPTY",
    "FAIL",
    "AffineSubspace",
    "FieldElement",
    "FoldedWord",
    "FrsError",
    "FrsParams",
    "Polynomial",
    "PrimeField",
    "brute_force_list",
    "build_expander",
    "canonical_key",
    "condition",
    "corrupt",
    "decode_end_to_end",
    "decoding_radius",
    "det_prune",
    "dimension_profile",
    "encode",
    "enumerate_points",
    "eval_geometric",
    "evaluate",
    "field_arith",
    "find_container",
    "folded_distance",
    "harness_container",
    "heavy_hitters",
    "intersect",
    "krsw_prune",
    "primitive_element",
    "rand_decode",
    "rand_prune_once",
    "second_eigenvalue",
]
