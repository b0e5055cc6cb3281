"""Cyclic edge actions and symmetrical Euler cycles of small multigraphs."""

from .errors import CapExceeded, ConstraintError, IncidenceError, PreconditionError
from .families import FamilySpec, build, recognize
from .cycles import EdgeCycle, HShape, construct_symmetrical_euler, h_group, is_symmetrical
from .multigraph import Multigraph, extender
from .perm import Automorphism, GraphMap, cyclic_action, classify_action, validate_automorphism

__all__ = [
    "CapExceeded", "ConstraintError", "IncidenceError", "PreconditionError",
    "FamilySpec", "build", "recognize",
    "EdgeCycle", "HShape", "construct_symmetrical_euler", "h_group", "is_symmetrical",
    "Multigraph", "extender", "Automorphism", "GraphMap", "cyclic_action",
    "classify_action", "validate_automorphism",
]
