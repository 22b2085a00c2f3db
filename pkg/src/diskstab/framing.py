"""Normalized coordinate frames over the smallest intersecting disk.

The base frame rescales the scene so the optimal disk is the unit disk at the
origin, relabels its three tangent disks, and rotates so the first tangency
point sits at (0, -1) with the remaining tangent lines sloping up on the left
and down on the right; among the three candidate labelings, the one whose
tangent-line triangle has its largest angle opposite the bottom disk wins.
The alternative frame instead rotates a chosen pivot disk's center onto the
positive x-axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .geom import (
    DEFAULT_TOL,
    DiskInput,
    Line,
    MIRROR_Y,
    Point,
    Similarity,
    Tolerance,
    as_disk_set,
    compose,
)
from .minstab import MinStabResult


class DegenerateBasisError(ValueError):
    """The optimum is not supported by three tangent disks."""


class PivotContainsCenterError(ValueError):
    """The requested pivot disk contains the optimal center."""


@dataclass(frozen=True)
class BaseFrame:
    to_frame: Similarity
    tangent_disks: tuple[int, int, int]
    tangency_points: tuple[Point, Point, Point]
    tangent_lines: tuple[Line, Line, Line]
    reflected_lines: tuple[Line, Line, Line]
    triangle_angles: tuple[float, float, float]  # degrees: (l1,l3), (l1,l2), (l2,l3)


@dataclass(frozen=True)
class AltFrame:
    to_frame: Similarity
    pivot_disk: int


class DminusInfo(NamedTuple):
    """Frame-unit view of the disks that miss the optimal center."""

    indices: np.ndarray      # members of D- with radius <= k (frame units)
    delta: np.ndarray        # |c c*| - r per disk, frame units
    radii: np.ndarray        # radii in frame units
    r_min: Optional[float]   # smallest radius over all of D-
    d_min: Optional[int]     # its index (lowest on ties)


def _normalizer(center: Point, rstar: float, rotation: float) -> Similarity:
    """Similarity mapping `center` to the origin, scale 1/rstar, then rotating."""
    s = 1.0 / rstar
    c, sn = math.cos(rotation), math.sin(rotation)
    tx = -s * (c * center.x - sn * center.y)
    ty = -s * (sn * center.x + c * center.y)
    return Similarity(rotation=rotation, scale=s, translation=(tx, ty))


def build_base_frame(
    disks: DiskInput, ms: MinStabResult, tol: Tolerance = DEFAULT_TOL
) -> BaseFrame:
    ds = as_disk_set(disks, tol)
    if ms.optimal_value <= tol.eps_abs:
        raise DegenerateBasisError("optimal radius is not positive")
    if len(ms.basis) != 3:
        raise DegenerateBasisError(f"basis has {len(ms.basis)} disks, need 3")
    cstar = np.array(ms.dstar.center)
    basis = list(ms.basis)
    vecs = ds.centers[basis] - cstar
    theta = np.degrees(np.arctan2(vecs[:, 1], vecs[:, 0])) % 360.0

    # Gap between the other two tangency directions, not through this one;
    # the triangle angle at the opposite vertex is 180 deg minus that gap.
    order = np.argsort(theta)
    gaps = {}
    for a in range(3):
        b = (a + 1) % 3
        lo, hi = order[a], order[b]
        gaps[frozenset((int(lo), int(hi)))] = (theta[hi] - theta[lo]) % 360.0

    best = None
    for j in range(3):
        pair = frozenset({0, 1, 2} - {j})
        angle = 180.0 - gaps[pair]
        key = (-round(angle / 1e-9), basis[j])
        if best is None or key < best[0]:
            best = (key, j, angle)
    j = best[1]
    others = sorted({0, 1, 2} - {j})

    rotation = math.radians(-90.0 - theta[j])
    to_frame = _normalizer(Point(*cstar), ms.optimal_value, rotation)

    rot = np.degrees(rotation)
    th = {m: (theta[m] + rot) % 360.0 for m in range(3)}
    # of the two non-bottom disks, the counterclockwise-later one is on the left
    a, b = others
    if th[a] >= th[b]:
        i2, i3 = a, b
    else:
        i2, i3 = b, a

    def tangency(m):
        t = math.radians(th[m])
        return Point(math.cos(t), math.sin(t))

    x1, x2, x3 = tangency(j), tangency(i2), tangency(i3)
    lines = tuple(Line(p.x, p.y, 1.0) for p in (x1, x2, x3))
    reflected = tuple(Line(p.x, p.y, -1.0) for p in (x1, x2, x3))
    beta = 180.0 - gaps[frozenset((j, i3))]
    gamma = 180.0 - gaps[frozenset((j, i2))]
    vertex = 180.0 - gaps[frozenset((i2, i3))]
    return BaseFrame(
        to_frame=to_frame,
        tangent_disks=(basis[j], basis[i2], basis[i3]),
        tangency_points=(x1, x2, x3),
        tangent_lines=lines,
        reflected_lines=reflected,
        triangle_angles=(beta, gamma, vertex),
    )


def reflect_base_frame(bf: BaseFrame) -> BaseFrame:
    """Mirror the frame across its y-axis, swapping the two upper disks."""

    def mx(p: Point) -> Point:
        return Point(-p.x, p.y)

    x1, x2, x3 = bf.tangency_points
    nx1, nx2, nx3 = mx(x1), mx(x3), mx(x2)
    lines = tuple(Line(p.x, p.y, 1.0) for p in (nx1, nx2, nx3))
    reflected = tuple(Line(p.x, p.y, -1.0) for p in (nx1, nx2, nx3))
    d1, d2, d3 = bf.tangent_disks
    beta, gamma, vertex = bf.triangle_angles
    return BaseFrame(
        to_frame=compose(MIRROR_Y, bf.to_frame),
        tangent_disks=(d1, d3, d2),
        tangency_points=(nx1, nx2, nx3),
        tangent_lines=lines,
        reflected_lines=reflected,
        triangle_angles=(gamma, beta, vertex),
    )


def build_alt_frame(
    disks: DiskInput, ms: MinStabResult, pivot: int, tol: Tolerance = DEFAULT_TOL
) -> AltFrame:
    ds = as_disk_set(disks, tol)
    if ms.optimal_value <= tol.eps_abs:
        raise DegenerateBasisError("optimal radius is not positive")
    cstar = np.array(ms.dstar.center)
    v = ds.centers[pivot] - cstar
    delta = math.hypot(v[0], v[1]) - ds.radii[pivot]
    if delta <= tol.eps_abs * ms.optimal_value:
        raise PivotContainsCenterError(f"disk {pivot} contains the optimal center")
    rotation = -math.atan2(v[1], v[0])
    return AltFrame(
        to_frame=_normalizer(Point(*cstar), ms.optimal_value, rotation),
        pivot_disk=pivot,
    )


def classify_dminus(
    disks: DiskInput, ms: MinStabResult, k: float = math.inf, tol: Tolerance = DEFAULT_TOL
) -> DminusInfo:
    """Split off the disks missing the optimal center, in frame units.

    A disk is in D- when its frame-unit clearance delta = |c c*| - r exceeds
    eps_abs; disks at most eps_abs away are treated as containing the center.
    The radius filter `k` is applied with the same slack.
    """
    ds = as_disk_set(disks, tol)
    rstar = ms.dstar.radius
    if rstar <= 0.0:
        raise ValueError("frame classification needs a positive optimal radius")
    cstar = np.array(ms.dstar.center)
    d = np.hypot(ds.centers[:, 0] - cstar[0], ds.centers[:, 1] - cstar[1]) / rstar
    radii = ds.radii / rstar
    delta = d - radii
    in_dminus = delta > tol.eps_abs
    indices = np.flatnonzero(in_dminus & (radii <= k + tol.eps_abs))
    if in_dminus.any():
        masked = np.where(in_dminus, radii, np.inf)
        d_min = int(np.argmin(masked))
        r_min = float(radii[d_min])
    else:
        d_min = None
        r_min = None
    return DminusInfo(indices, delta, radii, r_min, d_min)
