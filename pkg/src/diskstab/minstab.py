"""Smallest disk intersecting every disk of a family.

Minimizes f(c) = max_i (|c - c_i| - r_i); the optimum radius is max(0, f(c*)).
The solver is a violation-driven basis exchange with bases of at most three
disks: solve the current basis exactly, scan for the worst violated disk
(vectorized), fold it into the basis, repeat. A brute-force working-set solver
backs it up, and exact ties that leave the optimum supported by fewer than
three disks are resolved by a deterministic seeded perturbation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .geom import DEFAULT_TOL, Disk, DiskInput, Point, Tolerance, as_disk_set
from .rng import derive_seed, unit_floats

_MAX_EXCHANGE = 256
_MAX_ROUNDS = 512


@dataclass(frozen=True)
class MinStabResult:
    dstar: Disk
    basis: tuple[int, ...]
    optimal_value: float


def evaluate_objective(c: Point, disks: DiskInput) -> float:
    """max_i (|c - c_i| - r_i); negative iff c lies in every disk."""
    ds = as_disk_set(disks)
    if len(ds) == 0:
        raise ValueError("empty disk set")
    f = np.hypot(ds.centers[:, 0] - c[0], ds.centers[:, 1] - c[1]) - ds.radii
    return float(f.max())


def _candidates(centers, radii, group):
    """Stationary configurations of all subsets of `group` of size <= 3.

    Returns (points (m,2), values (m,), subsets). The optimum over `group`
    is the candidate whose point minimizes the group objective.
    """
    pts, vals, subs = [], [], []
    for i in group:
        pts.append(centers[i])
        vals.append(-radii[i])
        subs.append((i,))
    for i, j in itertools.combinations(group, 2):
        ci, cj = centers[i], centers[j]
        L = math.hypot(cj[0] - ci[0], cj[1] - ci[1])
        if L <= 0.0:
            continue
        t = 0.5 * (L + radii[i] - radii[j])
        if t < 0.0 or t > L:
            continue
        pts.append(ci + (t / L) * (cj - ci))
        vals.append(0.5 * (L - radii[i] - radii[j]))
        subs.append((i, j))
    for i, j, k in itertools.combinations(group, 3):
        for c, v in _three_active(centers, radii, i, j, k):
            pts.append(c)
            vals.append(v)
            subs.append((i, j, k))
    return np.array(pts), np.array(vals), subs


def _three_active(centers, radii, i, j, k):
    """Points where all three constraint functions are equal.

    With disk i shifted to the origin, equal values v satisfy a 2x2 linear
    system giving c = p + v*q, and |c| = v + r_i closes a quadratic in v.
    """
    ci = centers[i]
    cj = centers[j] - ci
    ck = centers[k] - ci
    ri, rj, rk = radii[i], radii[j], radii[k]
    a11, a12 = 2.0 * cj[0], 2.0 * cj[1]
    a21, a22 = 2.0 * ck[0], 2.0 * ck[1]
    det = a11 * a22 - a12 * a21
    scale2 = max(cj @ cj, ck @ ck, 1e-300)
    if abs(det) <= 1e-12 * scale2:
        return []
    b0j = cj @ cj - rj * rj + ri * ri
    b0k = ck @ ck - rk * rk + ri * ri
    bvj = -2.0 * (rj - ri)
    bvk = -2.0 * (rk - ri)
    p = np.array([(a22 * b0j - a12 * b0k) / det, (a11 * b0k - a21 * b0j) / det])
    q = np.array([(a22 * bvj - a12 * bvk) / det, (a11 * bvk - a21 * bvj) / det])
    qa = q @ q - 1.0
    qb = 2.0 * (p @ q - ri)
    qc = p @ p - ri * ri
    roots = []
    if abs(qa) <= 1e-14 * (1.0 + q @ q):
        if qb != 0.0:
            roots.append(-qc / qb)
    else:
        disc = qb * qb - 4.0 * qa * qc
        if disc < 0.0:
            return []
        sq = math.sqrt(disc)
        half = -0.5 * (qb + math.copysign(sq, qb))
        roots.append(half / qa)
        if half != 0.0:
            roots.append(qc / half)
    out = []
    rmin = min(ri, rj, rk)
    for v in roots:
        if not math.isfinite(v) or v + rmin < -1e-9 * (1.0 + abs(v)):
            continue
        out.append((ci + p + v * q, v))
    return out


def _solve_group(centers, radii, group, tie_eps):
    """Exact min-max over a group of disk indices (the group is small)."""
    group = tuple(sorted(set(group)))
    pts, vals, subs = _candidates(centers, radii, group)
    gidx = np.array(group)
    d = np.hypot(pts[:, None, 0] - centers[gidx, 0], pts[:, None, 1] - centers[gidx, 1])
    quality = (d - radii[gidx]).max(axis=1)
    qmin = quality.min()
    best = None
    for m in range(len(subs)):
        if quality[m] > qmin + tie_eps:
            continue
        key = (quality[m] - vals[m] > tie_eps, len(subs[m]), subs[m])
        if best is None or key < best[0]:
            best = (key, m)
    m = best[1]
    return pts[m], float(vals[m]), subs[m]


def _scan_violation(centers, radii, c, v):
    f = np.hypot(centers[:, 0] - c[0], centers[:, 1] - c[1]) - radii
    j = int(np.argmax(f))
    return j, float(f[j])


def _exchange(centers, radii, start, stop_eps, tie_eps):
    c, v, basis = _solve_group(centers, radii, start, tie_eps)
    stall = 0
    last_v = -math.inf
    for _ in range(_MAX_EXCHANGE):
        j, fmax = _scan_violation(centers, radii, c, v)
        if fmax - v <= stop_eps:
            return c, v, basis, True
        if v <= last_v + stop_eps:
            stall += 1
            if stall > 8:
                break
        else:
            stall = 0
        last_v = v
        c, v, basis = _solve_group(centers, radii, basis + (j,), tie_eps)
    return c, v, basis, False


def _working_set(centers, radii, start, stop_eps, tie_eps):
    """Fallback: grow a working set and re-solve it exactly each round."""
    ws = list(dict.fromkeys(start))
    c = v = basis = None
    for _ in range(_MAX_ROUNDS):
        c, v, basis = _solve_group(centers, radii, tuple(ws), tie_eps)
        j, fmax = _scan_violation(centers, radii, c, v)
        if fmax - v <= stop_eps or j in ws:
            return c, v, basis, fmax - v <= stop_eps
        ws.append(j)
        if len(ws) > 64:
            ws = list(basis) + ws[-48:]
    return c, v, basis, False


def smallest_intersecting_disk(
    disks: DiskInput, tol: Tolerance = DEFAULT_TOL, seed: int = 0
) -> MinStabResult:
    """Smallest disk meeting every input disk, with a certifying basis.

    The basis lists at most three input indices whose own optimum coincides
    with the full optimum; when the optimal radius is positive those disks are
    tangent to the result. Ties that make the optimum two-disk-supported are
    broken by a seeded 1e-9-of-diameter center perturbation, re-solved, and
    reported against the original disks.
    """
    ds = as_disk_set(disks, tol)
    n = len(ds)
    if n == 0:
        raise ValueError("empty disk set")
    centers, radii = ds.centers, ds.radii
    scale = 1.0 + float(np.abs(centers).max(initial=0.0)) + float(radii.max(initial=0.0))
    stop_eps = 64.0 * np.finfo(float).eps * scale
    tie_eps = 8.0 * np.finfo(float).eps * scale

    c, v, basis, ok = _exchange(centers, radii, (0,), stop_eps, tie_eps)
    if not ok:
        c, v, basis, ok = _working_set(centers, radii, basis + (0,), stop_eps, tie_eps)

    value = evaluate_objective(Point(float(c[0]), float(c[1])), ds)
    if value > tol.eps_abs and len(basis) < 3:
        pert = _perturbed_solution(ds, basis, seed, stop_eps, tie_eps)
        if pert is not None:
            c, basis = pert
            value = evaluate_objective(Point(float(c[0]), float(c[1])), ds)

    center = Point(float(c[0]), float(c[1]))
    return MinStabResult(Disk(center, max(0.0, value)), tuple(sorted(basis)), value)


def _perturbed_solution(ds, basis, seed, stop_eps, tie_eps):
    """Re-solve with jittered centers until three disks support the optimum."""
    n = len(ds)
    diam = ds.bounding_diameter() or 1.0
    angles = 2.0 * math.pi * unit_floats(derive_seed(seed, 0xD15C), 0, n)
    offs = np.column_stack([np.cos(angles), np.sin(angles)])
    for mag in (1e-9, 1e-7, 1e-5):
        centers = ds.centers + mag * diam * offs
        c, v, b, ok = _exchange(centers, ds.radii, tuple(basis) + (0,), stop_eps, tie_eps)
        if not ok:
            c, v, b, ok = _working_set(centers, ds.radii, b, stop_eps, tie_eps)
        if ok and len(b) == 3 and v > 0:
            return c, b
    return None
