"""Planar primitives: points, disks, oriented lines, similarity transforms.

Every predicate takes an explicit Tolerance so tangency decisions are
deterministic. All types are immutable and all operations pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, NamedTuple, Union

import numpy as np


class GeometryError(ValueError):
    pass


class Point(NamedTuple):
    x: float
    y: float


class Disk(NamedTuple):
    center: Point
    radius: float


class Line(NamedTuple):
    """Oriented line {p : nx*x + ny*y = c} with unit normal (nx, ny).

    The positive side is {p : nx*x + ny*y > c}.
    """

    nx: float
    ny: float
    c: float

    def signed_distance(self, p: Point) -> float:
        return self.nx * p.x + self.ny * p.y - self.c

    def mirrored_x(self) -> "Line":
        """Reflection across the y-axis (x -> -x)."""
        return Line(-self.nx, self.ny, self.c)

    def slope(self) -> float:
        """dy/dx of the line; +-inf for vertical lines."""
        if self.ny == 0.0:
            return math.inf
        return -self.nx / self.ny


def make_point(x: float, y: float) -> Point:
    x, y = float(x), float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise GeometryError(f"non-finite point ({x}, {y})")
    return Point(x, y)


def make_disk(x: float, y: float, r: float) -> Disk:
    r = float(r)
    if not math.isfinite(r) or r < 0.0:
        raise GeometryError(f"invalid radius {r}")
    return Disk(make_point(x, y), r)


def make_line(nx: float, ny: float, c: float) -> Line:
    norm = math.hypot(nx, ny)
    if norm == 0.0:
        raise GeometryError("zero normal vector")
    return Line(nx / norm, ny / norm, c / norm)


@dataclass(frozen=True)
class Tolerance:
    eps_abs: float = 1e-9
    eps_rel: float = 1e-12

    def __post_init__(self):
        if self.eps_abs <= 0 or self.eps_rel <= 0:
            raise GeometryError("tolerances must be positive")

    def slack(self, magnitude: float) -> float:
        return max(self.eps_abs, self.eps_rel * magnitude)

    def scaled(self, factor: float) -> "Tolerance":
        return Tolerance(self.eps_abs * factor, self.eps_rel)


DEFAULT_TOL = Tolerance()


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def disks_intersect(d1: Disk, d2: Disk, tol: Tolerance = DEFAULT_TOL) -> bool:
    rsum = d1.radius + d2.radius
    return dist(d1.center, d2.center) <= rsum + tol.slack(rsum)


def point_in_disk(p: Point, d: Disk, tol: Tolerance = DEFAULT_TOL) -> bool:
    return dist(p, d.center) <= d.radius + tol.slack(d.radius)


def disk_intersects_line(d: Disk, line: Line, tol: Tolerance = DEFAULT_TOL) -> bool:
    return abs(line.signed_distance(d.center)) <= d.radius + tol.slack(d.radius)


def tangent_line_at(d: Disk, p: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    """Tangent line to d at boundary point p, oriented away from the center.

    The positive side excludes the center. Raises if p is not on the boundary.
    """
    r = dist(p, d.center)
    if abs(r - d.radius) > tol.slack(d.radius) or r == 0.0:
        raise GeometryError(f"point {p} not on boundary of {d}")
    nx = (p.x - d.center.x) / r
    ny = (p.y - d.center.y) / r
    return Line(nx, ny, nx * p.x + ny * p.y)


@dataclass(frozen=True)
class Similarity:
    """Invertible plane map p -> scale * R(rotation) * (M p) + translation.

    M reflects across the y-axis when `reflect` is set; composition order is
    fixed as reflect, rotate, scale, translate.
    """

    rotation: float = 0.0
    scale: float = 1.0
    translation: tuple[float, float] = (0.0, 0.0)
    reflect: bool = False

    def __post_init__(self):
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise GeometryError(f"invalid scale {self.scale}")

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        m = np.array([[c, -s], [s, c]]) * self.scale
        if self.reflect:
            m[:, 0] = -m[:, 0]
        return m

    @classmethod
    def from_matrix(cls, m: np.ndarray, t: Sequence[float]) -> "Similarity":
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        scale = math.sqrt(abs(det))
        if scale == 0.0:
            raise GeometryError("singular matrix")
        reflect = det < 0
        col = (-m[0, 0], -m[1, 0]) if reflect else (m[0, 0], m[1, 0])
        return cls(math.atan2(col[1], col[0]), scale, (float(t[0]), float(t[1])), reflect)


def apply_similarity(T: Similarity, p: Point) -> Point:
    x = -p.x if T.reflect else p.x
    y = p.y
    c, s = math.cos(T.rotation), math.sin(T.rotation)
    return Point(
        T.scale * (c * x - s * y) + T.translation[0],
        T.scale * (s * x + c * y) + T.translation[1],
    )


def apply_similarity_disk(T: Similarity, d: Disk) -> Disk:
    return Disk(apply_similarity(T, d.center), T.scale * d.radius)


def apply_similarity_xy(T: Similarity, xs: np.ndarray, ys: np.ndarray):
    """Vectorized apply for coordinate arrays."""
    if T.reflect:
        xs = -xs
    c, s = math.cos(T.rotation), math.sin(T.rotation)
    return (
        T.scale * (c * xs - s * ys) + T.translation[0],
        T.scale * (s * xs + c * ys) + T.translation[1],
    )


def invert(T: Similarity) -> Similarity:
    m = T.matrix()
    minv = np.linalg.inv(m)
    t = -minv @ np.asarray(T.translation)
    return Similarity.from_matrix(minv, t)


def compose(outer: Similarity, inner: Similarity) -> Similarity:
    """Similarity equal to applying `inner` first, then `outer`."""
    mo, mi = outer.matrix(), inner.matrix()
    t = mo @ np.asarray(inner.translation) + np.asarray(outer.translation)
    return Similarity.from_matrix(mo @ mi, t)


MIRROR_Y = Similarity(reflect=True)

DiskInput = Union["DiskSet", Sequence[Disk]]


class DiskSet(Sequence[Disk]):
    """Array-backed collection of disks; behaves as a sequence of Disk.

    Large inputs should be built directly from coordinate arrays; per-element
    Disk objects are materialized only on access.
    """

    __slots__ = ("centers", "radii", "tol")

    def __init__(self, centers, radii, tol: Tolerance = DEFAULT_TOL):
        centers = np.asarray(centers, dtype=np.float64)
        radii = np.asarray(radii, dtype=np.float64)
        if centers.ndim != 2 or centers.shape[1] != 2 or radii.shape != (centers.shape[0],):
            raise GeometryError("centers must be (n,2) and radii (n,)")
        if not (np.all(np.isfinite(centers)) and np.all(np.isfinite(radii))):
            raise GeometryError("non-finite disk data")
        if np.any(radii < 0):
            raise GeometryError("negative radius")
        self.centers = centers
        self.radii = radii
        self.tol = tol

    @classmethod
    def from_disks(cls, disks: Iterable[Disk], tol: Tolerance = DEFAULT_TOL) -> "DiskSet":
        disks = list(disks)
        centers = np.array([[d.center.x, d.center.y] for d in disks], dtype=np.float64)
        radii = np.array([d.radius for d in disks], dtype=np.float64)
        if not disks:
            centers = centers.reshape(0, 2)
        return cls(centers, radii, tol)

    def __len__(self) -> int:
        return self.centers.shape[0]

    def __getitem__(self, i) -> Disk:
        if isinstance(i, slice):
            return DiskSet(self.centers[i], self.radii[i], self.tol)
        return Disk(Point(float(self.centers[i, 0]), float(self.centers[i, 1])),
                    float(self.radii[i]))

    def __iter__(self) -> Iterator[Disk]:
        for i in range(len(self)):
            yield self[i]

    def transformed(self, T: Similarity) -> "DiskSet":
        xs, ys = apply_similarity_xy(T, self.centers[:, 0], self.centers[:, 1])
        return DiskSet(np.column_stack([xs, ys]), self.radii * T.scale, self.tol)

    def bounding_diameter(self) -> float:
        """Diagonal of the bounding box of the disks (not just the centers)."""
        if len(self) == 0:
            return 0.0
        lo = (self.centers - self.radii[:, None]).min(axis=0)
        hi = (self.centers + self.radii[:, None]).max(axis=0)
        return float(np.hypot(*(hi - lo)))


def as_disk_set(disks: DiskInput, tol: Tolerance = DEFAULT_TOL) -> DiskSet:
    if isinstance(disks, DiskSet):
        return disks
    return DiskSet.from_disks(disks, tol)
