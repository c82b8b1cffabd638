"""Quadratic residue cyclic codes of composite length and m-th residue codes."""

from .cyclic import (
    CodeError,
    CyclicCode,
    DistanceRecord,
    dual_code,
    is_dual_containing,
    is_lcd,
    minimum_distance,
    new_cyclic_code,
)
from .field import FieldDescriptor, FieldElement, FieldError, make_extension_field, make_field, make_prime_field
from .mth import build_residue_code, count_classified, mth_context
from .poly import Poly
from .qr import (
    SelectorTuple,
    base_field_admissible,
    build_generator,
    classify_all,
    count_all,
    count_dual_containing,
    count_lcd,
    enumerate_selectors,
    qr_context,
)
from .residues import build_partition, jacobi, length_context, mth_residue_classes

__version__ = "0.1.0"

__all__ = [
    "CodeError",
    "CyclicCode",
    "DistanceRecord",
    "FieldDescriptor",
    "FieldElement",
    "FieldError",
    "Poly",
    "SelectorTuple",
    "base_field_admissible",
    "build_generator",
    "build_partition",
    "build_residue_code",
    "classify_all",
    "count_all",
    "count_classified",
    "count_dual_containing",
    "count_lcd",
    "dual_code",
    "enumerate_selectors",
    "is_dual_containing",
    "is_lcd",
    "jacobi",
    "length_context",
    "make_extension_field",
    "make_field",
    "make_prime_field",
    "minimum_distance",
    "mth_context",
    "mth_residue_classes",
    "new_cyclic_code",
    "qr_context",
]
