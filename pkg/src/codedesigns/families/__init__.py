"""Constructors and verifiers for the five code families."""

from .lift import lift_code, lift_formula, rank_kernel_weight, LiftEnum
from .mds import build_mds
from .op18 import build_op18, op18_classify
from .op27 import build_op27, op27_classify
from .op28 import Op28Witness, op28_construct, op28_exhaustive_necessity, op28_exists, projective_order

__all__ = [
    "LiftEnum", "Op28Witness", "build_mds", "build_op18", "build_op27", "lift_code",
    "lift_formula", "op18_classify", "op27_classify", "op28_construct",
    "op28_exhaustive_necessity", "op28_exists", "projective_order", "rank_kernel_weight",
]
