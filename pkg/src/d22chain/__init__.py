"""Open-boundary D2(2) spin chain toolkit built on its staggered-XXZ factorization."""

from .params import (
    DerivedBoundary,
    ModelParams,
    derived_boundary,
    hermitian_point_from_targets,
    staggered_theta,
)

__all__ = [
    "DerivedBoundary",
    "ModelParams",
    "derived_boundary",
    "hermitian_point_from_targets",
    "staggered_theta",
]
