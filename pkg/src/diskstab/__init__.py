"""Stab a family of pairwise intersecting disks with at most four (or five) points."""

from .geom import (
    DEFAULT_TOL,
    Disk,
    DiskSet,
    GeometryError,
    Line,
    Point,
    Similarity,
    Tolerance,
    apply_similarity,
    apply_similarity_disk,
    as_disk_set,
    compose,
    disk_intersects_line,
    disks_intersect,
    invert,
    make_disk,
    point_in_disk,
    tangent_line_at,
)
from .minstab import MinStabResult, evaluate_objective, smallest_intersecting_disk

__all__ = [
    "DEFAULT_TOL",
    "Disk",
    "DiskSet",
    "GeometryError",
    "Line",
    "MinStabResult",
    "Point",
    "Similarity",
    "Tolerance",
    "apply_similarity",
    "apply_similarity_disk",
    "as_disk_set",
    "compose",
    "disk_intersects_line",
    "disks_intersect",
    "evaluate_objective",
    "invert",
    "make_disk",
    "point_in_disk",
    "smallest_intersecting_disk",
    "tangent_line_at",
]
