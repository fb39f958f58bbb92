"""Exact arithmetic for idempotents, axes and fusion rules in non-associative algebras."""
from .algebra import Algebra, Element, subalgebra_closure
from .axes import AxisProfile, analyze_idempotent, check_fusion, decompose, decompose_via_formulas
from .fields import Field, Q, Residue

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AxisProfile",
    "Element",
    "Field",
    "Q",
    "Residue",
    "analyze_idempotent",
    "check_fusion",
    "decompose",
    "decompose_via_formulas",
    "subalgebra_closure",
]
