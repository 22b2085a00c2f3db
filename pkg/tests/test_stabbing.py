import math

import numpy as np
import pytest

from diskstab.geom import DiskSet, Point, Similarity, apply_similarity, make_disk
from diskstab.instances import (
    CASE_TARGETED,
    COMMON_POINT,
    GenProfile,
    MIXED_RADII,
    TANGENT_CORE,
    gen_instance,
)
from diskstab.minstab import smallest_intersecting_disk
from diskstab.framing import build_base_frame, classify_dminus, reflect_base_frame
from diskstab.stabbing import (
    ALPHA_SPLIT_DEG,
    CaseTag,
    FIVE_POINT_SET,
    GE4_SET,
    LE2_YNEG_SET,
    LE2_YPOS_SET,
    compute_alpha,
    stab_five,
    stab_four,
)
from diskstab.verify import verify_stab_result, verify_stabbing

ALL_FOUR_TAGS = (
    CaseTag.FOUR_RMIN_GE4,
    CaseTag.FOUR_RMIN_LE2_A17,
    CaseTag.FOUR_RMIN_LE2_YPOS,
    CaseTag.FOUR_RMIN_LE2_YNEG,
    CaseTag.FOUR_MID_SUB1,
    CaseTag.FOUR_MID_SUB2,
    CaseTag.FOUR_MID_SUB3,
    CaseTag.FOUR_MID_SUB4,
)


def test_five_point_frame_targets_are_exact():
    assert FIVE_POINT_SET == (
        Point(0, 0), Point(2, 0), Point(-2, 0), Point(0, 2), Point(0, -2))
    ds = gen_instance(GenProfile(TANGENT_CORE, 200, seed=42))
    res = stab_five(ds)
    if res.case_tag is CaseTag.FIVE:
        assert res.frame_points == FIVE_POINT_SET
    assert verify_stab_result(ds, res).ok


def test_four_point_ge4_frame_targets():
    assert GE4_SET == (Point(0, 0), Point(-4, 1), Point(4, 1), Point(0, -3))
    ds = gen_instance(GenProfile(CASE_TARGETED, 6, seed=0, tag=CaseTag.FOUR_RMIN_GE4))
    res = stab_four(ds)
    assert res.case_tag is CaseTag.FOUR_RMIN_GE4
    assert res.frame_points == GE4_SET


def test_ypos_branch_point_set():
    xr = 0.5 + 2 * math.sqrt(6) / 5
    assert LE2_YPOS_SET[2] == Point(-0.5, 1.83)
    assert LE2_YPOS_SET[3] == pytest.approx((xr, 0.2))
    # the mirrored branch is the reflection across the x-axis
    assert LE2_YNEG_SET == tuple(Point(p.x, -p.y) for p in LE2_YPOS_SET)


def test_compute_alpha():
    assert compute_alpha(Point(1, 1)) == pytest.approx(45.0)
    assert compute_alpha(Point(1, -1)) == pytest.approx(45.0)
    assert compute_alpha(Point(math.cos(math.radians(17)),
                               math.sin(math.radians(17)))) == pytest.approx(17.0)
    assert compute_alpha(Point(0.9563, 0.2924)) > 17.0  # just past the split
    assert compute_alpha(Point(-1, 1)) == pytest.approx(45.0)  # convex vs the axis
    with pytest.raises(ValueError):
        compute_alpha(Point(0, 0))


def test_helly_single_point():
    ds = gen_instance(GenProfile(COMMON_POINT, 40, seed=9))
    for solver in (stab_four, stab_five):
        res = solver(ds)
        assert res.case_tag is CaseTag.HELLY
        assert len(res.points) == 1
        assert verify_stabbing(ds, res.points).ok


def test_all_disks_share_explicit_point():
    disks = [make_disk(1, 2, 3), make_disk(0, 2, 1.5), make_disk(1.5, 2.5, 1)]
    res = stab_four(disks)
    assert res.case_tag is CaseTag.HELLY
    assert verify_stabbing(disks, res.points).ok


def test_cardinality_bounds():
    for seed in range(25):
        ds = gen_instance(GenProfile(MIXED_RADII, 40, seed=seed))
        r4 = stab_four(ds)
        r5 = stab_five(ds)
        assert len(r4.points) <= 4
        assert len(r5.points) <= 5
        assert verify_stab_result(ds, r4).ok
        assert verify_stab_result(ds, r5).ok


def _guard_holds(ds, res, tol_eps=1e-9):
    """Re-derive the dispatch guard for the returned tag from scratch."""
    ms = smallest_intersecting_disk(ds)
    if res.case_tag is CaseTag.HELLY:
        return ms.optimal_value <= tol_eps
    info = classify_dminus(ds, ms)
    rmin = info.r_min
    if res.case_tag is CaseTag.FOUR_RMIN_GE4:
        return rmin >= 4 - 1e-9
    if res.case_tag in (CaseTag.FOUR_RMIN_LE2_A17, CaseTag.FOUR_RMIN_LE2_YPOS,
                        CaseTag.FOUR_RMIN_LE2_YNEG):
        if rmin > 2 + 1e-9:
            return False
        bf = build_base_frame(ds, ms)
        small = info.indices[info.radii[info.indices] <= 2 + 1e-9]
        sel = int(small[np.argmax(info.delta[small])])
        c = apply_similarity(bf.to_frame, ds[sel].center)
        if c.x < 0:
            c = Point(-c.x, c.y)
        alpha = compute_alpha(c)
        if res.case_tag is CaseTag.FOUR_RMIN_LE2_A17:
            return alpha <= ALPHA_SPLIT_DEG + 1e-9
        if res.case_tag is CaseTag.FOUR_RMIN_LE2_YPOS:
            return alpha > ALPHA_SPLIT_DEG and c.y > 0
        return alpha > ALPHA_SPLIT_DEG and c.y < 0
    if not (2 - 1e-9 < rmin < 4 + 1e-9):
        return False
    le5 = info.indices[info.radii[info.indices] <= 5 + 1e-9]
    le20 = info.indices[info.radii[info.indices] <= 20 + 1e-9]
    sub1 = (info.delta[le5] >= 0.5 - 1e-9).any()
    sub2 = (info.delta[le20] >= 0.5 - 1e-9).any()
    sub3 = (info.delta[le5] >= 0.11 - 1e-9).any()
    if res.case_tag is CaseTag.FOUR_MID_SUB1:
        return sub1
    if res.case_tag is CaseTag.FOUR_MID_SUB2:
        return not sub1 and sub2
    if res.case_tag is CaseTag.FOUR_MID_SUB3:
        return not sub1 and not sub2 and sub3
    return not sub1 and not sub2 and not sub3


@pytest.mark.parametrize("tag", ALL_FOUR_TAGS)
def test_case_tag_guard_consistency(tag):
    for seed in range(3):
        ds = gen_instance(GenProfile(CASE_TARGETED, 9, seed=seed, tag=tag))
        res = stab_four(ds)
        assert res.case_tag is tag
        assert _guard_holds(ds, res)
        assert verify_stab_result(ds, res).ok


def test_equivariance_under_similarity():
    rng = np.random.default_rng(21)
    for seed in range(10):
        ds = gen_instance(GenProfile(MIXED_RADII, 30, seed=seed))
        base = stab_four(ds, seed=0)
        T = Similarity(rotation=float(rng.uniform(-3, 3)),
                       scale=float(np.exp(rng.uniform(-1.5, 1.5))),
                       translation=tuple(rng.uniform(-20, 20, 2)))
        moved = ds.transformed(T)
        res = stab_four(moved, seed=0)
        assert res.case_tag is base.case_tag
        scale = max(1.0, T.scale)
        for p, q in zip(base.points, res.points):
            want = apply_similarity(T, p)
            assert math.hypot(q.x - want.x, q.y - want.y) < 1e-8 * scale * 10


def test_reflection_mirrors_points_and_keeps_tag():
    # the dispatch reflects its own frame when needed, so mirroring the input
    # keeps the branch and mirrors the stabbing points
    for tag in (CaseTag.FOUR_RMIN_LE2_YPOS, CaseTag.FOUR_RMIN_LE2_YNEG,
                CaseTag.FOUR_MID_SUB2):
        ds = gen_instance(GenProfile(CASE_TARGETED, 6, seed=2, tag=tag))
        M = Similarity(reflect=True)
        res0 = stab_four(ds)
        res1 = stab_four(ds.transformed(M))
        assert res1.case_tag is res0.case_tag
        got = sorted((round(p.x, 6), round(p.y, 6)) for p in res1.points)
        want = sorted((round(-p.x, 6), round(p.y, 6)) for p in res0.points)
        assert got == want


def test_dispatch_order_exclusive():
    # one tag per instance, and the five-point variant never downgrades it
    for seed in range(10):
        ds = gen_instance(GenProfile(TANGENT_CORE, 60, seed=seed))
        tags = {stab_four(ds).case_tag for _ in range(2)}
        assert len(tags) == 1
