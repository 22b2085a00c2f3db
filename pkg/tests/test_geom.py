import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from diskstab.geom import (
    DEFAULT_TOL,
    DiskSet,
    GeometryError,
    Point,
    Similarity,
    Tolerance,
    apply_similarity,
    apply_similarity_disk,
    compose,
    disk_intersects_line,
    disks_intersect,
    invert,
    make_disk,
    make_line,
    point_in_disk,
    tangent_line_at,
)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
radius = st.floats(min_value=0.0, max_value=1e3, allow_nan=False)


def test_disks_intersect_examples():
    assert disks_intersect(make_disk(0, 0, 1), make_disk(2, 0, 1))  # tangent
    assert not disks_intersect(make_disk(0, 0, 1), make_disk(2.1, 0, 1))
    assert disks_intersect(make_disk(0, 0, 3), make_disk(1, 0, 0.5))  # nested


def test_point_in_disk_examples():
    d = make_disk(0, 0, 1)
    assert point_in_disk(Point(0, 0), d)
    assert point_in_disk(Point(0, 1), d)  # boundary counts
    assert not point_in_disk(Point(0, 1.001), d, Tolerance(1e-9, 1e-12))


def test_disk_intersects_line_examples():
    horiz = make_line(0, 1, 1)  # y = 1
    assert disk_intersects_line(make_disk(0, 2, 1), horiz)
    assert not disk_intersects_line(make_disk(0, 3, 1), horiz)
    vert = make_line(1, 0, 4)  # x = 4
    assert disk_intersects_line(make_disk(5, 0, 2), vert)


def test_tangent_line_at_examples():
    line = tangent_line_at(make_disk(0, 0, 1), Point(0, -1))
    assert abs(line.signed_distance(Point(0, -1))) < 1e-12
    assert line.signed_distance(Point(0, -2)) > 0  # positive side is y < -1
    assert line.signed_distance(Point(0, 0)) == pytest.approx(-1)

    line = tangent_line_at(make_disk(0, 0, 1), Point(1, 0))
    assert line.signed_distance(Point(2, 0)) > 0

    line = tangent_line_at(make_disk(2, 0, 2), Point(4, 0))
    assert abs(line.signed_distance(Point(4, 5))) < 1e-12

    with pytest.raises(GeometryError):
        tangent_line_at(make_disk(0, 0, 1), Point(0.5, 0))


def test_similarity_examples():
    assert apply_similarity(Similarity(), Point(1, 2)) == Point(1, 2)
    p = apply_similarity(Similarity(scale=2, translation=(1, 0)), Point(1, 1))
    assert p == pytest.approx((3, 2))
    p = apply_similarity(Similarity(reflect=True), Point(1, 2))
    assert p == pytest.approx((-1, 2))


def test_similarity_roundtrip_bulk():
    # 1e5 random transforms, relative round-trip error below 1e-9
    rng = np.random.default_rng(0)
    n = 100_000
    rots = rng.uniform(-np.pi, np.pi, n)
    scales = np.exp(rng.uniform(-3, 3, n))
    trans = rng.uniform(-100, 100, (n, 2))
    refl = rng.random(n) < 0.5
    pts = rng.uniform(-100, 100, (n, 2))
    worst = 0.0
    for i in range(n):
        T = Similarity(rots[i], scales[i], (trans[i, 0], trans[i, 1]), bool(refl[i]))
        p = Point(pts[i, 0], pts[i, 1])
        q = apply_similarity(invert(T), apply_similarity(T, p))
        err = math.hypot(q.x - p.x, q.y - p.y) / (1.0 + math.hypot(p.x, p.y))
        worst = max(worst, err)
    assert worst < 1e-9


@given(finite, finite, radius, finite, finite, radius)
def test_disks_intersect_symmetric(x1, y1, r1, x2, y2, r2):
    d1, d2 = make_disk(x1, y1, r1), make_disk(x2, y2, r2)
    assert disks_intersect(d1, d2) == disks_intersect(d2, d1)


@given(
    st.floats(-np.pi, np.pi), st.floats(-2, 2), finite, finite, st.booleans(),
    finite, finite, st.floats(0.01, 50), finite, finite, st.floats(0.01, 50),
)
def test_similarity_preserves_intersection(rot, lscale, tx, ty, refl,
                                           x1, y1, r1, x2, y2, r2):
    T = Similarity(rot, math.exp(lscale), (tx, ty), refl)
    d1, d2 = make_disk(x1, y1, r1), make_disk(x2, y2, r2)
    tol = Tolerance(DEFAULT_TOL.eps_abs * T.scale, DEFAULT_TOL.eps_rel)
    lhs = disks_intersect(d1, d2)
    rhs = disks_intersect(apply_similarity_disk(T, d1), apply_similarity_disk(T, d2), tol)
    gap = abs(
        math.hypot(d1.center.x - d2.center.x, d1.center.y - d2.center.y)
        - d1.radius - d2.radius
    )
    if gap * T.scale > 1e-7:  # away from the tangency knife edge
        assert lhs == rhs


def test_tangent_line_center_distance_property():
    rng = np.random.default_rng(3)
    for _ in range(300):
        c = rng.uniform(-50, 50, 2)
        r = rng.uniform(0.01, 30)
        th = rng.uniform(0, 2 * np.pi)
        p = Point(c[0] + r * np.cos(th), c[1] + r * np.sin(th))
        line = tangent_line_at(make_disk(c[0], c[1], r), p)
        assert line.signed_distance(Point(c[0], c[1])) == pytest.approx(-r, rel=1e-9)


def test_compose_matches_sequential_application():
    rng = np.random.default_rng(5)
    for _ in range(200):
        a = Similarity(rng.uniform(-3, 3), np.exp(rng.uniform(-2, 2)),
                       tuple(rng.uniform(-5, 5, 2)), bool(rng.random() < 0.5))
        b = Similarity(rng.uniform(-3, 3), np.exp(rng.uniform(-2, 2)),
                       tuple(rng.uniform(-5, 5, 2)), bool(rng.random() < 0.5))
        p = Point(*rng.uniform(-5, 5, 2))
        lhs = apply_similarity(compose(a, b), p)
        rhs = apply_similarity(a, apply_similarity(b, p))
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)


def test_disk_set_roundtrip_and_validation():
    ds = DiskSet.from_disks([make_disk(0, 0, 1), make_disk(2, 0, 1)])
    assert len(ds) == 2
    assert ds[1].center == Point(2, 0)
    assert list(ds)[0].radius == 1
    with pytest.raises(GeometryError):
        DiskSet(np.zeros((2, 2)), np.array([1.0, -1.0]))
    with pytest.raises(GeometryError):
        DiskSet(np.array([[np.nan, 0.0]]), np.array([1.0]))
