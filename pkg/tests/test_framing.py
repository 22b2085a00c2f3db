import math

import numpy as np
import pytest

from diskstab.framing import (
    DegenerateBasisError,
    PivotContainsCenterError,
    build_alt_frame,
    build_base_frame,
    classify_dminus,
    reflect_base_frame,
)
from diskstab.geom import (
    Disk,
    DiskSet,
    Point,
    Similarity,
    apply_similarity,
    make_disk,
)
from diskstab.instances import GenProfile, MIXED_RADII, gen_instance
from diskstab.minstab import MinStabResult, smallest_intersecting_disk


def _symmetric_instance():
    return [make_disk(2 * math.cos(math.radians(a)), 2 * math.sin(math.radians(a)), 1)
            for a in (270, 30, 150)]


def assert_base_frame_invariants(ds, bf, ms):
    x1, x2, x3 = bf.tangency_points
    assert x1 == pytest.approx((0, -1), abs=1e-9)
    for x in (x1, x2, x3):
        assert math.hypot(x.x, x.y) == pytest.approx(1.0, abs=1e-9)
    l1, l2, l3 = bf.tangent_lines
    assert l2.slope() > 0 and l3.slope() < 0
    beta, gamma, vertex = bf.triangle_angles
    assert vertex >= max(beta, gamma) - 1e-9
    # tangency points on the boundary of the mapped tangent disks
    frame = ds.transformed(bf.to_frame)
    for x, idx in zip((x1, x2, x3), bf.tangent_disks):
        d = math.hypot(frame.centers[idx, 0] - x.x, frame.centers[idx, 1] - x.y)
        assert d == pytest.approx(frame.radii[idx], rel=1e-6, abs=1e-7)
    # the origin is inside the tangency triangle
    pts = np.array([x1, x2, x3])
    s = 0
    for i in range(3):
        a, b = pts[i], pts[(i + 1) % 3]
        cross = a[0] * b[1] - a[1] * b[0]
        s += 1 if cross > -1e-9 else -1
    assert abs(s) == 3
    # every mapped disk meets the unit disk at the origin
    gap = np.hypot(frame.centers[:, 0], frame.centers[:, 1]) - frame.radii - 1.0
    assert gap.max() <= 1e-7
    # the positive side of each tangent line holds its disk's center
    for ln, idx in zip((l1, l2, l3), bf.tangent_disks):
        c = Point(frame.centers[idx, 0], frame.centers[idx, 1])
        if frame.radii[idx] > 1e-9:
            assert ln.signed_distance(c) > 0


def test_symmetric_example_identity_frame():
    disks = _symmetric_instance()
    ms = smallest_intersecting_disk(disks)
    bf = build_base_frame(disks, ms)
    # ties broken toward the lowest original index for the bottom disk
    assert bf.tangent_disks == (0, 2, 1)
    x1, x2, x3 = bf.tangency_points
    assert x1 == pytest.approx((0, -1), abs=1e-9)
    assert x2 == pytest.approx((-math.sqrt(3) / 2, 0.5), abs=1e-9)
    assert x3 == pytest.approx((math.sqrt(3) / 2, 0.5), abs=1e-9)
    assert bf.tangent_lines[1].slope() == pytest.approx(math.sqrt(3), abs=1e-9)
    assert bf.tangent_lines[2].slope() == pytest.approx(-math.sqrt(3), abs=1e-9)
    assert bf.triangle_angles == pytest.approx((60, 60, 60), abs=1e-9)
    assert bf.to_frame.scale == pytest.approx(1.0, abs=1e-12)
    for p in [Point(0.3, -0.2), Point(1, 1)]:
        assert apply_similarity(bf.to_frame, p) == pytest.approx(p, abs=1e-9)


def test_rotated_instance_gives_same_frame_data():
    disks = _symmetric_instance()
    T = Similarity(rotation=math.radians(40))
    rotated = DiskSet.from_disks(disks).transformed(T)
    bf0 = build_base_frame(disks, smallest_intersecting_disk(disks))
    bf1 = build_base_frame(rotated, smallest_intersecting_disk(rotated))
    for a, b in zip(bf0.tangency_points, bf1.tangency_points):
        assert a == pytest.approx(b, abs=1e-9)
    assert bf0.triangle_angles == pytest.approx(bf1.triangle_angles, abs=1e-7)


def test_random_instances_satisfy_invariants():
    from diskstab.instances import TANGENT_CORE

    count = 0
    for prof in (MIXED_RADII, TANGENT_CORE):
        for seed in range(40):
            ds = gen_instance(GenProfile(prof, 30, seed=seed))
            ms = smallest_intersecting_disk(ds)
            if ms.optimal_value <= 1e-9 or len(ms.basis) != 3:
                continue
            bf = build_base_frame(ds, ms)
            assert_base_frame_invariants(ds, bf, ms)
            count += 1
    assert count >= 15


def test_reflect_is_involution_and_keeps_invariants():
    for seed in range(20):
        ds = gen_instance(GenProfile(MIXED_RADII, 25, seed=seed))
        ms = smallest_intersecting_disk(ds)
        if ms.optimal_value <= 1e-9 or len(ms.basis) != 3:
            continue
        bf = build_base_frame(ds, ms)
        rf = reflect_base_frame(bf)
        assert_base_frame_invariants(ds, rf, ms)
        back = reflect_base_frame(rf)
        for a, b in zip(bf.tangency_points, back.tangency_points):
            assert a == pytest.approx(b, abs=1e-9)
        p = Point(0.37, -1.21)
        assert apply_similarity(back.to_frame, p) == pytest.approx(
            apply_similarity(bf.to_frame, p), abs=1e-9)


def test_degenerate_basis_rejected():
    disks = [make_disk(0, 0, 1), make_disk(4, 0, 1)]
    ms = smallest_intersecting_disk(disks)
    assert len(ms.basis) == 2
    with pytest.raises(DegenerateBasisError):
        build_base_frame(disks, ms)


def _unit_ms():
    return MinStabResult(Disk(Point(0.0, 0.0), 1.0), (0, 1, 2), 1.0)


def test_alt_frame_examples():
    disks = [make_disk(0, 3, 1), make_disk(3, 0, 1), make_disk(-3, 0, 2)]
    ms = _unit_ms()
    af = build_alt_frame(disks, ms, pivot=0)
    assert af.to_frame.rotation == pytest.approx(-math.pi / 2)
    assert apply_similarity(af.to_frame, Point(0, 3)) == pytest.approx((3, 0), abs=1e-9)
    af = build_alt_frame(disks, ms, pivot=1)  # already on the positive x-axis
    assert apply_similarity(af.to_frame, Point(3, 0)) == pytest.approx((3, 0), abs=1e-9)
    with pytest.raises(PivotContainsCenterError):
        build_alt_frame([make_disk(0, 0.5, 2)], ms, pivot=0)


def test_alt_frame_random_pivot_lands_on_axis():
    rng = np.random.default_rng(8)
    ms = _unit_ms()
    for _ in range(50):
        c = rng.uniform(-10, 10, 2)
        r = rng.uniform(0.1, 3)
        if math.hypot(*c) - r <= 0.05:
            continue
        af = build_alt_frame([make_disk(c[0], c[1], r)], ms, pivot=0)
        q = apply_similarity(af.to_frame, Point(c[0], c[1]))
        assert q.x > 0
        assert abs(q.y) <= 1e-9 * abs(q.x)


def test_classify_dminus_examples():
    ms = _unit_ms()
    disks = [make_disk(3, 0, 2), make_disk(0, 0.5, 2), make_disk(0, 4, 2.5),
             make_disk(5, 5, 3), make_disk(-8, 0, 7)]
    info = classify_dminus(disks, ms, k=2)
    assert info.delta[0] == pytest.approx(1.0)
    assert info.delta[1] == pytest.approx(-1.5)
    assert list(info.indices) == [0]
    info = classify_dminus(disks, ms)
    assert set(info.indices) == {0, 2, 3, 4}
    assert info.r_min == pytest.approx(2.0)
    assert info.d_min == 0
    # delta below the disk-center distance whenever the radius is positive
    d = np.hypot(np.array([d.center.x for d in disks]),
                 np.array([d.center.y for d in disks]))
    assert np.all(info.delta[list(info.indices)] < d[list(info.indices)] + 1e-12)


def test_classify_dminus_empty():
    ms = _unit_ms()
    info = classify_dminus([make_disk(0, 0.2, 1)], ms)
    assert info.r_min is None and info.d_min is None
    assert len(info.indices) == 0
