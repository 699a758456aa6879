"""Finite weak transition systems and the cylinder homotopy built on them."""
from .core import (BudgetExceeded, InvalidMorphismError, InvalidSystemError, ShapeError,
                   Transition, UnknownIdError, ValidationReport, Violation, WeakTransitionSystem,
                   WtsMorphism, compose, enum_homs, find_isomorphism, has_transition, identity,
                   is_cofibration, is_morphism, patching_closure, validate)

__all__ = [
    "BudgetExceeded", "InvalidMorphismError", "InvalidSystemError", "ShapeError", "Transition",
    "UnknownIdError", "ValidationReport", "Violation", "WeakTransitionSystem", "WtsMorphism",
    "compose", "enum_homs", "find_isomorphism", "has_transition", "identity", "is_cofibration",
    "is_morphism", "patching_closure", "validate",
]
