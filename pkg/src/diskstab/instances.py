"""Deterministic generation of pairwise-intersecting disk families, plus I/O.

All randomness comes from the counter-based generator in `rng`, with one
fixed draw layout per profile, so a (name, n, seed, scale) tuple reproduces
byte-identical instances on any platform with IEEE doubles.

Pairwise intersection is enforced by incremental rejection: a candidate is
kept only if it intersects every disk accepted before it. Profiles bias
candidates toward a shared core region so acceptance stays high, and checks
that provably cannot fail (mutual containment of a common point) are skipped.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geom import DEFAULT_TOL, DiskSet, Point, Similarity, Tolerance
from .rng import Stream, derive_seed, unit_floats
from .stabbing import CaseTag, stab_four
from .verify import verify_stab_result

COMMON_POINT = "common_point"
TANGENT_CORE = "tangent_core"
MIXED_RADII = "mixed_radii"
CASE_TARGETED = "case_targeted"

PROFILE_NAMES = (COMMON_POINT, TANGENT_CORE, MIXED_RADII, CASE_TARGETED)

_MAX_TARGETED_ATTEMPTS = 1_000_000


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GenerationExhaustedError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenProfile:
    name: str
    n: int
    seed: int
    scale: float = 1.0
    tag: Optional[CaseTag] = None

    def __post_init__(self):
        if self.name not in PROFILE_NAMES:
            raise ValueError(f"unknown profile {self.name!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.name == CASE_TARGETED and self.tag is None:
            raise ValueError("case_targeted needs a tag")


def gen_instance(profile: GenProfile) -> DiskSet:
    if profile.name == COMMON_POINT:
        return _gen_common_point(profile)
    if profile.name == TANGENT_CORE:
        return _gen_tangent_core(profile)
    if profile.name == MIXED_RADII:
        return _gen_mixed_radii(profile)
    return _gen_case_targeted(profile)


def _gen_common_point(p: GenProfile) -> DiskSet:
    anchor = unit_floats(derive_seed(p.seed, 0xC0, 1), 0, 2)
    px = (anchor[0] * 10.0 - 5.0) * p.scale
    py = (anchor[1] * 10.0 - 5.0) * p.scale
    u = unit_floats(derive_seed(p.seed, 0xC0, 2), 0, 3 * p.n).reshape(p.n, 3)
    radii = np.exp(np.log(0.5) + u[:, 0] * (np.log(50.0) - np.log(0.5))) * p.scale
    ang = 2.0 * np.pi * u[:, 1]
    off = u[:, 2] * 0.98 * radii
    centers = np.column_stack([px + off * np.cos(ang), py + off * np.sin(ang)])
    return DiskSet(centers, radii)


def _gen_tangent_core(p: GenProfile) -> DiskSet:
    """Disks meeting a fixed core disk: a few small ones poking past its
    center from outside, the rest containing the center outright.

    Disks that contain the core center pairwise-intersect by construction, so
    incremental rejection only ever tests candidates against the pokers.
    """
    s = Stream(p.seed, 0x7C, 1)
    rho = p.scale * (0.3 + 0.7 * s.next_float())
    big = min(p.n, 3 + s.randint(0, 2))
    rim = 0
    if p.n > big and s.next_float() < 0.6:
        rim = min(p.n - big, 1 + s.randint(0, 1))
    k = big + rim
    centers = np.empty((p.n, 2))
    radii = np.empty(p.n)

    # pokers miss the core center by delta but stay mutually intersecting;
    # wide radii tolerate wide angular spreads, small rim disks do not, and
    # two pokers on opposite sides could never meet at all
    while True:
        if rim:
            span = s.uniform(120.0, 180.0)
        elif big == 2:
            span = 100.0
        else:
            span = s.uniform(180.0, 360.0)
        for i in range(big):
            ang = math.radians(span / big * i + s.uniform(-20.0, 20.0))
            r = rho * s.uniform(4.0, 20.0)
            delta = rho * s.uniform(0.02, 0.45)
            d = r + delta
            centers[i] = (d * math.cos(ang), d * math.sin(ang))
            radii[i] = r
        for i in range(big, k):
            ang = math.radians(span / 2.0 + s.uniform(-20.0, 20.0))
            r = rho * s.uniform(0.35, 1.8)
            delta = rho * s.uniform(0.05, 0.45)
            d = r + delta
            centers[i] = (d * math.cos(ang), d * math.sin(ang))
            radii[i] = r
        if k == 1 or _pairwise_ok(centers[:k], radii[:k]):
            break
    got = k

    bulk_seed = derive_seed(p.seed, 0x7C, 2)
    idx = 0
    block = 4096
    while got < p.n:
        u = unit_floats(bulk_seed, 5 * idx, 5 * block).reshape(block, 5)
        idx += block
        ang = 2.0 * np.pi * u[:, 0]
        d = rho * 8.0 * u[:, 1] ** 2
        r = d * (1.0 + 2.0 * u[:, 2]) + rho * (0.05 + 2.0 * u[:, 3] ** 4 * 40.0)
        cx, cy = d * np.cos(ang), d * np.sin(ang)
        keep = np.ones(block, dtype=bool)
        for j in range(k):
            keep &= np.hypot(cx - centers[j, 0], cy - centers[j, 1]) <= r + radii[j]
        sel = np.flatnonzero(keep)[: p.n - got]
        m = len(sel)
        centers[got : got + m, 0] = cx[sel]
        centers[got : got + m, 1] = cy[sel]
        radii[got : got + m] = r[sel]
        got += m
    return DiskSet(centers, radii)


def _gen_mixed_radii(p: GenProfile) -> DiskSet:
    """Log-uniform radii over [0.5, 50]*scale; centers pulled toward the
    origin proportionally to radius; full incremental rejection.

    Candidates are screened in blocks against the already-accepted prefix
    (vectorized), then sequentially against survivors of the same block, so
    the result is exactly the one-at-a-time rejection order.
    """
    seed = derive_seed(p.seed, 0x314D)
    centers = np.empty((p.n, 2))
    radii = np.empty(p.n)
    got = 0
    idx = 0
    block = 256
    lo, hi = math.log(0.5), math.log(50.0)
    while got < p.n:
        u = unit_floats(seed, 4 * idx, 4 * block).reshape(block, 4)
        idx += block
        r = np.exp(lo + u[:, 0] * (hi - lo)) * p.scale
        # offset fraction above 1 lets small disks miss the shared region
        beta = 0.3 + 0.8 * u[:, 3]
        d = np.sqrt(u[:, 1]) * (0.2 * p.scale + beta * r)
        ang = 2.0 * np.pi * u[:, 2]
        cx, cy = d * np.cos(ang), d * np.sin(ang)
        ok_prior = np.ones(block, dtype=bool)
        if got:
            dist = np.hypot(
                cx[:, None] - centers[None, :got, 0], cy[:, None] - centers[None, :got, 1]
            )
            ok_prior = (dist <= r[:, None] + radii[None, :got]).all(axis=1)
        block_start = got
        for m in np.flatnonzero(ok_prior):
            if got >= p.n:
                break
            ok = True
            for j in range(block_start, got):
                if math.hypot(cx[m] - centers[j, 0], cy[m] - centers[j, 1]) > r[m] + radii[j]:
                    ok = False
                    break
            if ok:
                centers[got] = (cx[m], cy[m])
                radii[got] = r[m]
                got += 1
    return DiskSet(centers, radii)


def _tangent_disk(theta_deg: float, r: float) -> tuple[float, float, float]:
    """Disk of radius r externally tangent to the unit disk at angle theta."""
    t = math.radians(theta_deg)
    d = 1.0 + r
    return (d * math.cos(t), d * math.sin(t), r)


def _clearance_disk(theta_deg: float, r: float, delta: float) -> tuple[float, float, float]:
    """Disk of radius r whose boundary stays `delta` away from the origin."""
    t = math.radians(theta_deg)
    d = delta + r
    return (d * math.cos(t), d * math.sin(t), r)


def _targeted_core(tag: CaseTag, s: Stream) -> list[tuple[float, float, float]]:
    """Canonical (unit-frame) construction aimed at one dispatch branch.

    The optimal disk of each construction is the unit disk at the origin,
    supported by three tangent disks; extra disks steer r_min, the clearance
    maxima, and the extremal angle into the target branch. Angle and radius
    windows keep every pair intersecting; the caller still re-checks.
    """
    rows: list[tuple[float, float, float]] = []
    if tag == CaseTag.FOUR_RMIN_GE4:
        for base in (270.0, 150.0, 30.0):
            rows.append(_tangent_disk(base + s.uniform(-2.5, 2.5), s.uniform(8.0, 16.0)))
        for _ in range(s.randint(0, 2)):
            anchor = (270.0, 150.0, 30.0)[s.randint(0, 2)]
            rows.append(
                _clearance_disk(anchor + s.uniform(-10.0, 10.0),
                                s.uniform(4.6, 30.0), s.uniform(0.2, 0.9))
            )
    elif tag == CaseTag.FOUR_RMIN_LE2_A17:
        r3 = s.uniform(1.55, 1.95)
        sig_max = math.degrees(math.acos((1.0 - r3) / (1.0 + r3))) - 2.0
        th_c = s.uniform(4.0, min(14.0, sig_max - 90.0))
        th_b = s.uniform(96.0, min(88.0 + 2.0 * th_c, th_c + sig_max - 1.0, 112.0))
        rows.append(_tangent_disk(270.0, s.uniform(3000.0, 8000.0)))
        rows.append(_tangent_disk(th_b, s.uniform(3000.0, 8000.0)))
        rows.append(_tangent_disk(th_c, r3))
    elif tag == CaseTag.FOUR_RMIN_LE2_YPOS:
        rows.append(_tangent_disk(270.0, s.uniform(3000.0, 8000.0)))
        rows.append(_tangent_disk(s.uniform(97.0, 103.0), s.uniform(3000.0, 8000.0)))
        rows.append(_tangent_disk(s.uniform(27.0, 34.0), s.uniform(4.0, 8.0)))
        rows.append(
            _clearance_disk(s.uniform(18.5, 23.0), s.uniform(1.8, 1.99), s.uniform(0.05, 0.15))
        )
    elif tag == CaseTag.FOUR_RMIN_LE2_YNEG:
        rows.append(_tangent_disk(270.0, s.uniform(30000.0, 60000.0)))
        rows.append(_tangent_disk(s.uniform(91.5, 93.5), s.uniform(30000.0, 60000.0)))
        rows.append(_tangent_disk(s.uniform(25.0, 35.0), s.uniform(4.0, 8.0)))
        rows.append(
            _clearance_disk(-s.uniform(18.5, 22.0), s.uniform(1.85, 1.99), s.uniform(0.05, 0.12))
        )
    else:
        bases = (270.0, 150.0, 30.0)
        for base in bases:
            rows.append(_tangent_disk(base + s.uniform(-2.0, 2.0), s.uniform(28.0, 60.0)))
        anchor = bases[s.randint(0, 2)]
        if tag == CaseTag.FOUR_MID_SUB1:
            rows.append(_clearance_disk(anchor + s.uniform(-8.0, 8.0),
                                        s.uniform(2.6, 3.4), s.uniform(0.05, 0.3)))
            rows.append(_clearance_disk(anchor + s.uniform(-12.0, 12.0),
                                        s.uniform(4.4, 4.95), s.uniform(0.55, 0.8)))
        elif tag == CaseTag.FOUR_MID_SUB2:
            rows.append(_clearance_disk(anchor + s.uniform(-8.0, 8.0),
                                        s.uniform(2.6, 3.4), s.uniform(0.05, 0.3)))
            rows.append(_clearance_disk(anchor + s.uniform(-25.0, 25.0),
                                        s.uniform(8.0, 17.0), s.uniform(0.55, 0.8)))
        elif tag == CaseTag.FOUR_MID_SUB3:
            rows.append(_clearance_disk(anchor + s.uniform(-6.0, 6.0),
                                        s.uniform(2.8, 3.6), s.uniform(0.15, 0.45)))
        elif tag == CaseTag.FOUR_MID_SUB4:
            rows.append(_clearance_disk(anchor + s.uniform(-8.0, 8.0),
                                        s.uniform(2.8, 3.6), s.uniform(0.02, 0.08)))
        else:
            raise ValueError(f"unsupported target tag {tag}")
    return rows


def _pairwise_ok(centers: np.ndarray, radii: np.ndarray) -> bool:
    d = np.hypot(centers[:, None, 0] - centers[None, :, 0],
                 centers[:, None, 1] - centers[None, :, 1])
    return bool((d <= radii[:, None] + radii[None, :]).all())


def _gen_case_targeted(p: GenProfile) -> DiskSet:
    """Filtered stream: construct candidates aimed at `tag`, keep the ones the
    four-point dispatch actually classifies that way."""
    tag = p.tag
    if tag == CaseTag.HELLY:
        return _gen_common_point(GenProfile(COMMON_POINT, p.n, p.seed, p.scale))
    if tag == CaseTag.FIVE:
        raise ValueError("FIVE is never produced by the four-point dispatch")
    for attempt in range(_MAX_TARGETED_ATTEMPTS):
        s = Stream(p.seed, 0xCA5E, attempt)
        rows = _targeted_core(tag, s)
        centers = np.array([[x, y] for x, y, _ in rows])
        radii = np.array([r for _, _, r in rows])
        if not _pairwise_ok(centers, radii):
            continue
        centers, radii = _pad_and_place(centers, radii, p, s)
        ds = DiskSet(centers, radii)
        try:
            res = stab_four(ds, seed=0)
        except Exception:
            continue
        if res.case_tag == tag and verify_stab_result(ds, res).ok:
            return ds
    raise GenerationExhaustedError(f"no instance with tag {tag} after "
                                   f"{_MAX_TARGETED_ATTEMPTS} attempts")


def _pad_and_place(centers, radii, p: GenProfile, s: Stream):
    """Pad with scene-covering disks up to n, then apply a random similarity.

    Covering disks contain the whole construction, so they intersect every
    disk and never join the set of disks missing the optimal center.
    """
    extra = p.n - len(radii)
    if extra > 0:
        reach = float((np.hypot(centers[:, 0], centers[:, 1]) + radii).max())
        pads_c = np.empty((extra, 2))
        pads_r = np.empty(extra)
        for i in range(extra):
            ang = s.angle()
            d = s.uniform(0.0, 1.5)
            pads_c[i] = (d * math.cos(ang), d * math.sin(ang))
            pads_r[i] = reach + d + s.uniform(0.1, reach)
        centers = np.vstack([centers, pads_c])
        radii = np.concatenate([radii, pads_r])
    rot = s.angle()
    scl = p.scale * math.exp(s.uniform(math.log(0.25), math.log(4.0)))
    tx, ty = s.uniform(-10, 10) * p.scale, s.uniform(-10, 10) * p.scale
    T = Similarity(rotation=rot, scale=scl, translation=(tx, ty))
    ds = DiskSet(centers, radii).transformed(T)
    return ds.centers, ds.radii


def read_disks(path, tol: Tolerance = DEFAULT_TOL) -> DiskSet:
    """Text format: one `cx cy r` triple per line; `#` starts a comment."""
    centers, radii = [], []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"expected 'cx cy r', got {line!r}", lineno)
            try:
                cx, cy, r = (float(v) for v in parts)
            except ValueError:
                raise ParseError(f"bad number in {line!r}", lineno) from None
            if not all(math.isfinite(v) for v in (cx, cy, r)):
                raise ParseError("non-finite value", lineno)
            if r < 0:
                raise ParseError(f"negative radius {r}", lineno)
            centers.append((cx, cy))
            radii.append(r)
    return DiskSet(np.array(centers).reshape(-1, 2), np.array(radii), tol)


def write_disks(path, disks: DiskSet) -> None:
    ds = disks
    with open(path, "w", encoding="utf-8") as fh:
        for i in range(len(ds)):
            fh.write(
                f"{ds.centers[i, 0]:.17g} {ds.centers[i, 1]:.17g} {ds.radii[i]:.17g}\n"
            )


def disks_to_obj(disks: DiskSet, meta: Optional[dict] = None) -> dict:
    return {
        "disks": [
            {"cx": float(disks.centers[i, 0]), "cy": float(disks.centers[i, 1]),
             "r": float(disks.radii[i])}
            for i in range(len(disks))
        ],
        "meta": meta or {},
    }


def disks_from_obj(obj: dict, tol: Tolerance = DEFAULT_TOL) -> tuple[DiskSet, dict]:
    rows = obj.get("disks", [])
    centers = np.array([[d["cx"], d["cy"]] for d in rows]).reshape(-1, 2)
    radii = np.array([d["r"] for d in rows])
    return DiskSet(centers, radii, tol), obj.get("meta", {})


def write_instance(path, disks: DiskSet, meta: Optional[dict] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(disks_to_obj(disks, meta), fh)
        fh.write("\n")


def read_instance(path, tol: Tolerance = DEFAULT_TOL) -> tuple[DiskSet, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return disks_from_obj(json.load(fh), tol)


def read_points(path) -> list[Point]:
    """Text format: one `x y` pair per line; `#` starts a comment."""
    pts = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'x y', got {line!r}", lineno)
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError:
                raise ParseError(f"bad number in {line!r}", lineno) from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ParseError("non-finite value", lineno)
            pts.append(Point(x, y))
    return pts


def write_points(path, points) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in points:
            fh.write(f"{p[0]:.17g} {p[1]:.17g}\n")
