"""Exact classification of Littlewood-Richardson coefficients and minimal
eigencone facet lists for the compact groups of types A, B and C."""

from .classify import LrClassifier, classify_triple, horn_member, is_lr_01
from .cones import facets, facets_A, facets_B, facets_C, member, verify_irredundant
from .lr import LrClass, c_ijk, classify_value, lr_coefficient, triple_coefficient
from .weights import (
    dual,
    lambda_of_indexset,
    restrict,
    shift,
    total,
    type_of,
)

__version__ = "0.1.0"

__all__ = [
    "LrClass",
    "LrClassifier",
    "c_ijk",
    "classify_triple",
    "classify_value",
    "dual",
    "facets",
    "facets_A",
    "facets_B",
    "facets_C",
    "horn_member",
    "is_lr_01",
    "lambda_of_indexset",
    "lr_coefficient",
    "member",
    "restrict",
    "shift",
    "total",
    "triple_coefficient",
    "type_of",
    "verify_irredundant",
    "__version__",
]
