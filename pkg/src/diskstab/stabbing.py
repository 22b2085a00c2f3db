"""Four- and five-point stabbing constructions.

Both algorithms normalize the scene over the smallest intersecting disk, emit
a fixed point set in frame coordinates chosen by a case dispatch, and map the
points back to input coordinates. If all disks share a point the optimal
center alone stabs everything and the dispatch short-circuits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .geom import (
    DEFAULT_TOL,
    Disk,
    DiskInput,
    Point,
    Similarity,
    Tolerance,
    apply_similarity,
    as_disk_set,
    invert,
)
from .framing import (
    AltFrame,
    BaseFrame,
    build_alt_frame,
    build_base_frame,
    classify_dminus,
    reflect_base_frame,
)
from .minstab import MinStabResult, smallest_intersecting_disk


class CaseTag(Enum):
    HELLY = "HELLY"
    FIVE = "FIVE"
    FOUR_RMIN_GE4 = "FOUR_RMIN_GE4"
    FOUR_RMIN_LE2_A17 = "FOUR_RMIN_LE2_A17"
    FOUR_RMIN_LE2_YPOS = "FOUR_RMIN_LE2_YPOS"
    FOUR_RMIN_LE2_YNEG = "FOUR_RMIN_LE2_YNEG"
    FOUR_MID_SUB1 = "FOUR_MID_SUB1"
    FOUR_MID_SUB2 = "FOUR_MID_SUB2"
    FOUR_MID_SUB3 = "FOUR_MID_SUB3"
    FOUR_MID_SUB4 = "FOUR_MID_SUB4"


@dataclass(frozen=True)
class StabResult:
    points: tuple[Point, ...]          # input coordinates
    case_tag: CaseTag
    frame_points: tuple[Point, ...]    # diagnostics, frame coordinates
    to_frame: Optional[Similarity] = None
    dstar: Optional[Disk] = None


FIVE_POINT_SET = (
    Point(0.0, 0.0), Point(2.0, 0.0), Point(-2.0, 0.0), Point(0.0, 2.0), Point(0.0, -2.0),
)

_X_RIGHT = 0.5 + 2.0 * math.sqrt(6.0) / 5.0

GE4_SET = (Point(0.0, 0.0), Point(-4.0, 1.0), Point(4.0, 1.0), Point(0.0, -3.0))
LE2_SMALL_ALPHA_SET = (Point(-0.5, 0.0), Point(0.0, -1.7), Point(0.0, 1.7), Point(1.5, 0.0))
LE2_YPOS_SET = (Point(-0.5, 0.0), Point(0.5, -2.5), Point(-0.5, 1.83), Point(_X_RIGHT, 0.2))
LE2_YNEG_SET = (Point(-0.5, 0.0), Point(0.5, 2.5), Point(-0.5, -1.83), Point(_X_RIGHT, -0.2))
MID_SUB1_SET = (Point(0.0, 0.0), Point(2.0, 0.0), Point(0.4, 2.0), Point(0.4, -2.0))
MID_SUB2_SET = (Point(0.0, 0.0), Point(2.0, 0.0), Point(-0.15, 2.7), Point(-0.15, -2.7))
MID_SUB3_SET = (Point(0.0, 0.0), Point(2.0, 0.0), Point(-0.15, 1.75), Point(-0.15, -1.75))
MID_SUB4_SET = (Point(0.0, 0.0), Point(2.5, 1.0), Point(-2.5, 1.0), Point(0.0, -1.52))

ALPHA_SPLIT_DEG = 17.0


def compute_alpha(c: Point) -> float:
    """Convex angle, in degrees, between segment from the origin to c and the x-axis."""
    if c.x == 0.0 and c.y == 0.0:
        raise ValueError("alpha undefined for the zero vector")
    a = math.degrees(math.atan2(abs(c.y), c.x))
    return min(a, 180.0 - a)


def _helly_result(ms: MinStabResult) -> StabResult:
    return StabResult(
        points=(ms.dstar.center,),
        case_tag=CaseTag.HELLY,
        frame_points=(Point(0.0, 0.0),),
        to_frame=None,
        dstar=ms.dstar,
    )


def _finish(frame_pts, tag, to_frame, ms) -> StabResult:
    back = invert(to_frame)
    return StabResult(
        points=tuple(apply_similarity(back, p) for p in frame_pts),
        case_tag=tag,
        frame_points=tuple(frame_pts),
        to_frame=to_frame,
        dstar=ms.dstar,
    )


def stab_five(disks: DiskInput, tol: Tolerance = DEFAULT_TOL, seed: int = 0) -> StabResult:
    """At most five stabbing points for pairwise intersecting disks."""
    ds = as_disk_set(disks, tol)
    ms = smallest_intersecting_disk(ds, tol, seed)
    if ms.optimal_value <= tol.eps_abs:
        return _helly_result(ms)
    bf = build_base_frame(ds, ms, tol)
    return _finish(FIVE_POINT_SET, CaseTag.FIVE, bf.to_frame, ms)


def stab_four(disks: DiskInput, tol: Tolerance = DEFAULT_TOL, seed: int = 0) -> StabResult:
    """At most four stabbing points for pairwise intersecting disks.

    Dispatch key is r_min, the smallest frame-unit radius among disks missing
    the optimal center; thresholds carry eps_abs slack toward the branch
    listed first.
    """
    ds = as_disk_set(disks, tol)
    ms = smallest_intersecting_disk(ds, tol, seed)
    if ms.optimal_value <= tol.eps_abs:
        return _helly_result(ms)
    bf = build_base_frame(ds, ms, tol)
    info = classify_dminus(ds, ms, math.inf, tol)
    if info.d_min is None:
        return _helly_result(ms)
    eps = tol.eps_abs
    r_min = info.r_min

    if r_min >= 4.0 - eps:
        return _finish(GE4_SET, CaseTag.FOUR_RMIN_GE4, bf.to_frame, ms)

    if r_min <= 2.0 + eps:
        small = info.indices[info.radii[info.indices] <= 2.0 + eps]
        sel = int(small[np.argmax(info.delta[small])])
        c = apply_similarity(bf.to_frame, ds[sel].center)
        if c.x < 0.0:
            bf = reflect_base_frame(bf)
            c = Point(-c.x, c.y)
        alpha = compute_alpha(c)
        if abs(c.y) <= eps * max(1.0, abs(c.x)) and alpha > ALPHA_SPLIT_DEG + eps:
            raise AssertionError("extremal small disk on the x-axis must have alpha <= 17")
        if alpha <= ALPHA_SPLIT_DEG + eps:
            return _finish(LE2_SMALL_ALPHA_SET, CaseTag.FOUR_RMIN_LE2_A17, bf.to_frame, ms)
        if c.y > 0.0:
            return _finish(LE2_YPOS_SET, CaseTag.FOUR_RMIN_LE2_YPOS, bf.to_frame, ms)
        return _finish(LE2_YNEG_SET, CaseTag.FOUR_RMIN_LE2_YNEG, bf.to_frame, ms)

    # 2 < r_min < 4
    within5 = info.indices[info.radii[info.indices] <= 5.0 + eps]
    within20 = info.indices[info.radii[info.indices] <= 20.0 + eps]

    def best_pivot(cand, floor):
        ok = cand[info.delta[cand] >= floor - eps]
        if ok.size == 0:
            return None
        return int(ok[np.argmax(info.delta[ok])])

    for cand, floor, pts, tag in (
        (within5, 0.5, MID_SUB1_SET, CaseTag.FOUR_MID_SUB1),
        (within20, 0.5, MID_SUB2_SET, CaseTag.FOUR_MID_SUB2),
        (within5, 0.11, MID_SUB3_SET, CaseTag.FOUR_MID_SUB3),
    ):
        pivot = best_pivot(cand, floor)
        if pivot is not None:
            af = build_alt_frame(ds, ms, pivot, tol)
            return _finish(pts, tag, af.to_frame, ms)
    return _finish(MID_SUB4_SET, CaseTag.FOUR_MID_SUB4, bf.to_frame, ms)
