"""Independent checks: input validity, stabbing coverage, solver minimality.

Everything here recomputes from raw coordinates; nothing trusts intermediate
state of the solver or the dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .geom import DEFAULT_TOL, DiskInput, Point, Tolerance, as_disk_set
from .minstab import MinStabResult
from .rng import unit_floats, derive_seed


class Violation(NamedTuple):
    kind: str
    indices: tuple[int, ...]
    magnitude: float


@dataclass
class VerifyReport:
    ok: bool = True
    violations: list = field(default_factory=list)
    checked: dict = field(default_factory=dict)

    def add(self, kind: str, indices: tuple[int, ...], magnitude: float):
        self.violations.append(Violation(kind, indices, float(magnitude)))
        self.ok = False

    def count(self, kind: str, n: int = 1):
        self.checked[kind] = self.checked.get(kind, 0) + n


def verify_pairwise(
    disks: DiskInput,
    tol: Tolerance = DEFAULT_TOL,
    max_pairs: Optional[int] = None,
    seed: int = 0,
) -> VerifyReport:
    """Report every pair of disks that fails to intersect.

    Quadratic in n; pass `max_pairs` to check a seeded random sample of pairs
    on large inputs instead.
    """
    ds = as_disk_set(disks, tol)
    n = len(ds)
    rep = VerifyReport()
    total = n * (n - 1) // 2
    if max_pairs is not None and total > max_pairs:
        u = unit_floats(derive_seed(seed, 0xAB), 0, 2 * max_pairs).reshape(-1, 2)
        ii = (u[:, 0] * n).astype(np.int64)
        jj = (u[:, 1] * n).astype(np.int64)
        keep = ii != jj
        ii, jj = ii[keep], jj[keep]
        d = np.hypot(*(ds.centers[ii] - ds.centers[jj]).T)
        rsum = ds.radii[ii] + ds.radii[jj]
        slack = np.maximum(tol.eps_abs, tol.eps_rel * rsum)
        bad = np.flatnonzero(d > rsum + slack)
        for b in bad:
            rep.add("pairwise", (int(ii[b]), int(jj[b])), d[b] - rsum[b])
        rep.count("pairwise_sampled", len(ii))
        return rep
    block = max(1, min(n, 4_000_000 // max(n, 1) + 1))
    for lo in range(0, n, block):
        hi = min(n, lo + block)
        d = np.hypot(
            ds.centers[lo:hi, None, 0] - ds.centers[None, :, 0],
            ds.centers[lo:hi, None, 1] - ds.centers[None, :, 1],
        )
        rsum = ds.radii[lo:hi, None] + ds.radii[None, :]
        slack = np.maximum(tol.eps_abs, tol.eps_rel * rsum)
        gap = d - rsum - slack
        rows, cols = np.nonzero(gap > 0)
        for r, c in zip(rows, cols):
            i, j = lo + int(r), int(c)
            if i < j:
                rep.add("pairwise", (i, j), gap[r, c])
    rep.count("pairwise", total)
    return rep


def verify_stabbing(
    disks: DiskInput, points: Sequence[Point], tol: Tolerance = DEFAULT_TOL
) -> VerifyReport:
    """Report every disk that contains none of the points."""
    ds = as_disk_set(disks, tol)
    rep = VerifyReport()
    rep.count("stabbing", len(ds))
    if len(ds) == 0:
        return rep
    pts = np.asarray([[p[0], p[1]] for p in points], dtype=np.float64)
    if pts.size == 0:
        for i in range(len(ds)):
            rep.add("unstabbed", (i,), np.inf)
        return rep
    d = np.hypot(
        ds.centers[:, None, 0] - pts[None, :, 0],
        ds.centers[:, None, 1] - pts[None, :, 1],
    ).min(axis=1)
    slack = np.maximum(tol.eps_abs, tol.eps_rel * ds.radii)
    bad = np.flatnonzero(d > ds.radii + slack)
    for i in bad:
        rep.add("unstabbed", (int(i),), d[i] - ds.radii[i])
    return rep


def verify_stab_result(disks: DiskInput, result, frame_eps: float = 1e-9) -> VerifyReport:
    """Check a stabbing result in frame units with absolute slack `frame_eps`.

    Falls back to input units (same eps) when the result carries no frame.
    """
    ds = as_disk_set(disks)
    tol = Tolerance(eps_abs=frame_eps, eps_rel=1e-15)
    if result.to_frame is None:
        return verify_stabbing(ds, result.points, tol)
    return verify_stabbing(ds.transformed(result.to_frame), result.frame_points, tol)


def verify_minimality(
    disks: DiskInput,
    ms: MinStabResult,
    trials: int = 64,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> VerifyReport:
    """Confirm the solved disk meets every input and cannot shrink.

    For each trial a nearby center is probed with radius scaled by 1 - 1e-4;
    some disk must be missed. Trivially passes for a zero-radius optimum.
    """
    ds = as_disk_set(disks, tol)
    rep = VerifyReport()
    c = np.array(ms.dstar.center)
    f = np.hypot(ds.centers[:, 0] - c[0], ds.centers[:, 1] - c[1]) - ds.radii
    worst = float(f.max()) - ms.dstar.radius
    rep.count("intersects_all", len(ds))
    if worst > tol.slack(ms.dstar.radius):
        rep.add("dstar_misses_disk", (int(np.argmax(f)),), worst)
    if ms.dstar.radius <= 0.0:
        return rep
    r_small = ms.dstar.radius * (1.0 - 1e-4)
    u = unit_floats(derive_seed(seed, 0x311), 0, 2 * trials).reshape(-1, 2)
    rep.count("shrink_probe", trials)
    for t in range(trials):
        ang = 2.0 * np.pi * u[t, 0]
        mag = ms.dstar.radius * 1e-4 * u[t, 1]
        p = c + mag * np.array([np.cos(ang), np.sin(ang)])
        fmax = float((np.hypot(ds.centers[:, 0] - p[0], ds.centers[:, 1] - p[1]) - ds.radii).max())
        if fmax <= r_small:
            rep.add("shrinkable", (), r_small - fmax)
    return rep
