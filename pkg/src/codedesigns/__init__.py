"""Exact verification of subline, ovoid and MDS code families over finite fields."""

from .codes import LinearCode, WeightEnum, enumerate_weights
from .designs import Design, complement, t_design_lambda
from .errors import BudgetExceeded, VerificationError
from .gf import FieldCtx, build_field

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Design", "FieldCtx", "LinearCode", "VerificationError", "WeightEnum",
    "build_field", "complement", "enumerate_weights", "t_design_lambda",
]
