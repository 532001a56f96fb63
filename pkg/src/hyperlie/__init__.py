"""Four-dimensional hypercomplex Lie groups with Hermitian-Norden metrics as matrix groups."""

from hyperlie.families import (
    FAMILIES,
    Branch,
    ExpCoefficients,
    FamilyElement,
    FamilyId,
    branch_report,
    exp_closed_form,
    exp_coefficients,
    generator,
)
from hyperlie.geometry import ClassificationReport, classify
from hyperlie.mat4 import char_poly, exp_series

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "Branch",
    "ClassificationReport",
    "ExpCoefficients",
    "FamilyElement",
    "FamilyId",
    "branch_report",
    "char_poly",
    "classify",
    "exp_closed_form",
    "exp_coefficients",
    "exp_series",
    "generator",
]
