"""Randomized property suites for the elementary geometric facts the stabbing
correctness argument rests on.

Each observation pairs a constructive sampler (hypotheses built directly, with
rejection only for inequality constraints) with a checker that evaluates the
stated conclusion; a False from the checker is a counterexample. Samplers for
the strip observations randomize the line orientation; the remaining settings
are stated for a horizontal line and are sampled that way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geom import DEFAULT_TOL, Disk, Point, Tolerance, point_in_disk
from .rng import Stream
from .verify import VerifyReport

_REJECTION_CAP = 10_000


class SamplerExhaustedError(RuntimeError):
    pass


class HypothesisError(ValueError):
    """The configuration does not satisfy the observation's hypotheses."""


class ObservationId(Enum):
    OBS1 = "OBS1"
    OBS2_OUTSIDE_STRIP = "OBS2_OUTSIDE_STRIP"
    OBS3_RADIUS = "OBS3_RADIUS"
    OBS4_B = "OBS4_B"
    OBS5_BIG = "OBS5_BIG"
    COR6_SMALLER = "COR6_SMALLER"
    OBS7_5PLUS = "OBS7_5PLUS"
    OBS8_RAYS = "OBS8_RAYS"


@dataclass(frozen=True)
class ObservationConfig:
    obs_id: ObservationId
    objects: dict


def _seg_dist(p: Point, a: Point, b: Point) -> float:
    ax, ay = b.x - a.x, b.y - a.y
    L2 = ax * ax + ay * ay
    if L2 == 0.0:
        return math.hypot(p.x - a.x, p.y - a.y)
    t = ((p.x - a.x) * ax + (p.y - a.y) * ay) / L2
    t = min(1.0, max(0.0, t))
    return math.hypot(p.x - (a.x + t * ax), p.y - (a.y + t * ay))


def _disk(cx, cy, r) -> Disk:
    return Disk(Point(cx, cy), r)


def _moved(objects: dict, s: Stream) -> dict:
    """Apply a random rotation + translation to a strip-observation scene."""
    th = s.angle()
    co, si = math.cos(th), math.sin(th)
    tx, ty = s.uniform(-20, 20), s.uniform(-20, 20)

    def mp(p: Point) -> Point:
        return Point(co * p.x - si * p.y + tx, si * p.x + co * p.y + ty)

    out = {}
    for k, v in objects.items():
        if isinstance(v, Disk):
            out[k] = Disk(mp(v.center), v.radius)
        elif isinstance(v, Point):
            out[k] = mp(v)
        elif k == "line_dir":
            out[k] = (co * v[0] - si * v[1], si * v[0] + co * v[1])
        else:
            out[k] = v
    return out


# -- strip setting (shared by OBS1, OBS2, OBS3) ------------------------------
#
# Directed line through `line_point` along unit `line_dir`; above means to the
# left. a precedes b. V is the slab of points whose projection falls between
# a and b. eta sits below, disjoint from the line or tangent to segment ab,
# and meets V; `witness` certifies the required intersections.


def _strip_base(s: Stream, need_delta: bool):
    for _ in range(_REJECTION_CAP):
        ta = -s.uniform(0.5, 3.0)
        tb = s.uniform(0.5, 3.0)
        r_eta = s.uniform(0.2, 3.0)
        tangent = (not need_delta) and s.next_float() < 0.5
        if tangent:
            tc = s.uniform(ta + 0.05 * (tb - ta), tb - 0.05 * (tb - ta))
            depth = r_eta
        else:
            tc = s.uniform(ta - 0.9 * r_eta, tb + 0.9 * r_eta)
            depth = r_eta + s.uniform(0.01, 2.0)
        eta = _disk(tc, -depth, r_eta)
        if need_delta:
            # the tangent family through a,b must reach eta (root exists)
            m = 0.5 * (ta + tb)
            q = 0.5 * (tb - ta)
            if math.hypot(m - tc, depth) >= q + r_eta - 1e-9:
                continue
        lo = max(-r_eta, ta - tc)
        hi = min(r_eta, tb - tc)
        if lo >= hi:
            continue
        lam = s.uniform(lo, hi)
        half = 0.999 * math.sqrt(max(0.0, r_eta * r_eta - lam * lam))
        w = Point(tc + lam, -depth + s.uniform(-half, half))
        return ta, tb, eta, w
    raise SamplerExhaustedError("strip base sampler")


def _delta_through_ab(ta: float, tb: float, eta: Disk) -> Disk:
    """Disk through (ta,0) and (tb,0), center above the x-axis, externally
    tangent to `eta` (which lies strictly below)."""
    m = 0.5 * (ta + tb)
    q = 0.5 * (tb - ta)
    ex, ey = eta.center.x - m, eta.center.y
    A = ex * ex
    C = A + ey * ey - q * q - eta.radius * eta.radius
    qa = 4.0 * (ey * ey - eta.radius * eta.radius)
    qb = -4.0 * C * ey
    qc = C * C - 4.0 * eta.radius * eta.radius * q * q
    roots = []
    if abs(qa) < 1e-13 * (1 + ey * ey):
        if qb != 0.0:
            roots = [-qc / qb]
    else:
        disc = qb * qb - 4.0 * qa * qc
        if disc < 0:
            raise HypothesisError("no tangent disk through a, b")
        sq = math.sqrt(disc)
        roots = [(-qb + sq) / (2 * qa), (-qb - sq) / (2 * qa)]
    best = None
    for h in roots:
        if h <= 0 or C - 2.0 * h * ey < 0:
            continue
        R = math.hypot(h, q)
        resid = abs(math.hypot(m - eta.center.x, h - eta.center.y) - R - eta.radius)
        if resid < 1e-7 * (1 + R) and (best is None or h < best[0]):
            best = (h, R)
    if best is None:
        raise HypothesisError("no tangent disk through a, b")
    return _disk(m, best[0], best[1])


def _gen_obs1(s: Stream) -> dict:
    ta, tb, eta, w = _strip_base(s, need_delta=False)
    span = tb - ta
    ex = s.uniform(ta - 3 * span, tb + 3 * span)
    ey = s.uniform(0.05, 3.0) * max(1.0, span)
    re = math.hypot(ex - w.x, ey - w.y) * (1.0 + s.uniform(0.0, 1.0))
    objs = {
        "line_point": Point(0.0, 0.0), "line_dir": (1.0, 0.0),
        "a": Point(ta, 0.0), "b": Point(tb, 0.0),
        "eta": eta, "eps": _disk(ex, ey, re), "witness": w,
    }
    return _moved(objs, s)


def _gen_obs2(s: Stream) -> dict:
    ta, tb, eta, w = _strip_base(s, need_delta=False)
    span = tb - ta
    side = 1.0 if s.next_float() < 0.5 else -1.0
    off = s.uniform(0.02, 3.0) * span
    ex = (tb + off) if side > 0 else (ta - off)
    ey = s.uniform(0.05, 3.0) * max(1.0, span)
    re = math.hypot(ex - w.x, ey - w.y) * (1.0 + s.uniform(0.0, 1.0))
    objs = {
        "line_point": Point(0.0, 0.0), "line_dir": (1.0, 0.0),
        "a": Point(ta, 0.0), "b": Point(tb, 0.0),
        "eta": eta, "eps": _disk(ex, ey, re), "witness": w,
    }
    return _moved(objs, s)


def _gen_obs3(s: Stream) -> dict:
    ta, tb, eta, _ = _strip_base(s, need_delta=True)
    delta = _delta_through_ab(ta, tb, eta)
    ex = s.uniform(ta, tb)
    ey = s.uniform(0.05, 3.0) * max(1.0, tb - ta)
    need = max(delta.radius, math.hypot(ex - eta.center.x, ey - eta.center.y) - eta.radius)
    infl = 1.0 if s.next_float() < 0.15 else 1.0 + s.uniform(0.0, 0.8)
    objs = {
        "line_point": Point(0.0, 0.0), "line_dir": (1.0, 0.0),
        "a": Point(ta, 0.0), "b": Point(tb, 0.0),
        "eta": eta, "delta": delta, "eps": _disk(ex, ey, need * infl),
    }
    return _moved(objs, s)


def _strip_frame(objects):
    px, py = objects["line_point"]
    dx, dy = objects["line_dir"]

    def proj(p: Point) -> float:
        return (p.x - px) * dx + (p.y - py) * dy

    def height(p: Point) -> float:
        return -(p.x - px) * dy + (p.y - py) * dx

    return proj, height


def _validate_strip(objects, tol: Tolerance):
    proj, height = _strip_frame(objects)
    a, b, eta = objects["a"], objects["b"], objects["eta"]
    if abs(height(a)) > tol.eps_abs or abs(height(b)) > tol.eps_abs:
        raise HypothesisError("a and b must lie on the line")
    if proj(a) >= proj(b):
        raise HypothesisError("a must precede b")
    h = height(eta.center)
    if h >= 0:
        raise HypothesisError("eta center must be below the line")
    if -h < eta.radius - tol.eps_abs:
        raise HypothesisError("eta must avoid the line or touch it")
    if -h <= eta.radius + tol.eps_abs:
        t = proj(eta.center)
        if not (proj(a) - tol.eps_abs <= t <= proj(b) + tol.eps_abs):
            raise HypothesisError("eta tangency must fall on segment ab")
    if proj(eta.center) + eta.radius < proj(a) or proj(eta.center) - eta.radius > proj(b):
        raise HypothesisError("eta must meet the strip")


def _validate_witness(objects, tol: Tolerance):
    proj, height = _strip_frame(objects)
    w, eta, eps = objects["witness"], objects["eta"], objects["eps"]
    if not point_in_disk(w, eta, tol) or not point_in_disk(w, eps, tol):
        raise HypothesisError("witness must lie in eta and eps")
    if not (proj(objects["a"]) - tol.eps_abs <= proj(w) <= proj(objects["b"]) + tol.eps_abs):
        raise HypothesisError("witness must lie in the strip")
    if height(eps.center) <= 0:
        raise HypothesisError("eps center must be above the line")


def _check_obs1(objects, tol: Tolerance) -> bool:
    eps = objects["eps"]
    d = _seg_dist(eps.center, objects["a"], objects["b"])
    return d <= eps.radius + tol.slack(eps.radius)


def _check_obs2(objects, tol: Tolerance) -> bool:
    eps = objects["eps"]
    return point_in_disk(objects["a"], eps, tol) or point_in_disk(objects["b"], eps, tol)


_check_obs3 = _check_obs2


def _validate_obs2(objects, tol: Tolerance):
    _validate_strip(objects, tol)
    _validate_witness(objects, tol)
    proj, _ = _strip_frame(objects)
    t = proj(objects["eps"].center)
    if proj(objects["a"]) <= t <= proj(objects["b"]):
        raise HypothesisError("eps center must be outside the strip")


def _validate_obs3(objects, tol: Tolerance):
    _validate_strip(objects, tol)
    proj, height = _strip_frame(objects)
    eps, eta, delta = objects["eps"], objects["eta"], objects["delta"]
    if height(eps.center) <= 0:
        raise HypothesisError("eps center must be above the line")
    t = proj(eps.center)
    if not (proj(objects["a"]) - tol.eps_abs <= t <= proj(objects["b"]) + tol.eps_abs):
        raise HypothesisError("eps center must be in the strip")
    if eps.radius < delta.radius - tol.slack(delta.radius):
        raise HypothesisError("eps must be at least as large as delta")
    gap = math.hypot(eps.center.x - eta.center.x, eps.center.y - eta.center.y)
    if gap > eps.radius + eta.radius + tol.eps_abs:
        raise HypothesisError("eps must meet eta")
    for p in (objects["a"], objects["b"]):
        if abs(math.hypot(p.x - delta.center.x, p.y - delta.center.y) - delta.radius) \
                > 1e-6 * (1 + delta.radius):
            raise HypothesisError("delta must pass through a and b")
    tang = abs(math.hypot(delta.center.x - eta.center.x, delta.center.y - eta.center.y)
               - delta.radius - eta.radius)
    if tang > 1e-6 * (1 + delta.radius):
        raise HypothesisError("delta must be tangent to eta")


# -- OBS4: two points above a horizontal line --------------------------------


def _gen_obs4(s: Stream) -> dict:
    for _ in range(_REJECTION_CAP):
        ax = s.uniform(-3.0, 1.0)
        bx = ax + s.uniform(0.3, 4.0)
        ay = s.uniform(0.1, 3.0)
        by = s.uniform(0.1, 3.0)
        if abs(ay - by) < 0.02:
            continue
        qa = by - ay
        qb = -2.0 * (ax * by - bx * ay)
        qc = by * (ax * ax + ay * ay) - ay * (bx * bx + by * by)
        disc = qb * qb - 4.0 * qa * qc
        if disc <= 0:
            continue
        sq = math.sqrt(disc)
        u = (-qb + sq) / (2 * qa) if s.next_float() < 0.5 else (-qb - sq) / (2 * qa)
        v = ((u - ax) ** 2 + ay * ay) / (2.0 * ay)
        ex = s.uniform(ax, bx)
        ey = v + s.uniform(0.01, 4.0)
        re = ey * (1.0 if s.next_float() < 0.15 else 1.0 + s.uniform(0.0, 1.5))
        return {
            "a": Point(ax, ay), "b": Point(bx, by),
            "delta": _disk(u, v, v), "eps": _disk(ex, ey, re),
        }
    raise SamplerExhaustedError("obs4 sampler")


def _validate_obs4(objects, tol: Tolerance):
    a, b, delta, eps = objects["a"], objects["b"], objects["delta"], objects["eps"]
    if a.y <= 0 or b.y <= 0 or a.x >= b.x:
        raise HypothesisError("a and b must be above the line with a left of b")
    if abs(delta.center.y - delta.radius) > 1e-7 * (1 + delta.radius):
        raise HypothesisError("delta must be tangent to the line from above")
    for p in (a, b):
        if abs(math.hypot(p.x - delta.center.x, p.y - delta.center.y) - delta.radius) \
                > 1e-6 * (1 + delta.radius):
            raise HypothesisError("delta must pass through a and b")
    if not (a.x <= eps.center.x <= b.x):
        raise HypothesisError("eps center must be in the vertical strip")
    if eps.center.y <= delta.center.y:
        raise HypothesisError("eps center must be above delta's center")
    if eps.radius < eps.center.y - tol.eps_abs:
        raise HypothesisError("eps must reach the line")


_check_obs4 = _check_obs2


# -- OBS5 / COR6 / OBS7: tangent-disk settings over a horizontal line --------


def _gen_big_scene(s: Stream):
    """Common scene: eta crossing the x-axis, ell' tangent above it, delta
    tangent to the axis from above and to eta from the left."""
    r_eta = s.uniform(0.5, 3.0)
    eta_y = r_eta * s.uniform(0.05, 0.95)
    eta_x = s.uniform(-2.0, 2.0)
    H = eta_y + r_eta
    r_d = 0.5 * H * (1.0 + s.uniform(0.05, 1.5))
    gap2 = (r_d + r_eta) ** 2 - (r_d - eta_y) ** 2
    px = eta_x - math.sqrt(gap2)
    cd = Point(px, r_d)
    eta = _disk(eta_x, eta_y, r_eta)
    L = math.hypot(eta_x - px, eta_y - r_d)
    q = Point(px + r_d * (eta_x - px) / L, r_d + r_d * (eta_y - r_d) / L)
    rx = px + math.sqrt(max(0.0, r_d * r_d - (H - r_d) ** 2))
    r_pt = Point(rx, H)
    return eta, H, _disk(px, r_d, r_d), q, r_pt


def _arc_point(cd: Disk, th_lo: float, th_hi: float, s: Stream) -> Point:
    span = (th_hi - th_lo) % (2.0 * math.pi)
    th = th_lo + span * s.uniform(0.03, 0.97)
    return Point(cd.center.x + cd.radius * math.cos(th),
                 cd.center.y + cd.radius * math.sin(th))


def _eps_upper_left(s: Stream, a_pt: Point, reaches: list[tuple[Point, float]]) -> Disk:
    ex = a_pt.x - s.uniform(0.05, 4.0)
    ey = a_pt.y + s.uniform(0.05, 4.0)
    need = ey
    for (c, r) in reaches:
        need = max(need, math.hypot(ex - c.x, ey - c.y) - r)
    infl = 1.0 if s.next_float() < 0.15 else 1.0 + s.uniform(0.0, 0.8)
    return _disk(ex, ey, need * infl)


def _theta_a_max(eta: Disk, delta: Disk, th_q: float) -> float:
    """Upper angle bound keeping `a` below-left of all of eta, as in the
    figures: the observation's shield argument needs eta entirely to the
    right of a."""
    t = (eta.center.x - eta.radius - delta.center.x) / delta.radius
    th_left = -math.acos(min(1.0, max(-1.0, t)))
    return min(th_q, th_left)


def _gen_obs5(s: Stream) -> dict:
    while True:
        eta, H, delta, q, r_pt = _gen_big_scene(s)
        cd = delta.center
        th_q = math.atan2(q.y - cd.y, q.x - cd.x)
        th_hi = _theta_a_max(eta, delta, th_q)
        if th_hi > -0.5 * math.pi + 0.02:
            break
    th_r = math.atan2(r_pt.y - cd.y, r_pt.x - cd.x)
    a_pt = _arc_point(delta, -0.5 * math.pi, th_hi, s)
    b_pt = _arc_point(delta, th_r, 0.5 * math.pi, s)
    eps = _eps_upper_left(s, a_pt, [(eta.center, eta.radius)])
    return {"eta": eta, "ellp_y": H, "delta": delta, "p": Point(cd.x, 0.0),
            "q": q, "r": r_pt, "s": Point(cd.x, cd.y + delta.radius),
            "a": a_pt, "b": b_pt, "eps": eps}


def _gen_cor6(s: Stream) -> dict:
    objs = _gen_obs5(s)
    eta = objs["eta"]
    rp = eta.radius * s.uniform(0.15, 0.95)
    off = (eta.radius - rp) * s.next_float()
    th = s.angle()
    etap = _disk(eta.center.x + off * math.cos(th), eta.center.y + off * math.sin(th), rp)
    a_pt = objs["a"]
    objs["etap"] = etap
    objs["eps"] = _eps_upper_left(s, a_pt, [(etap.center, etap.radius)])
    return objs


def _gen_obs7(s: Stream) -> dict:
    for _ in range(_REJECTION_CAP):
        eta, H, delta, q, r_pt = _gen_big_scene(s)
        cd = delta.center
        r_g = 0.5 * H * s.uniform(0.1, 0.9)
        gx = cd.x - s.uniform(0.0, 4.0) * delta.radius
        if gx > eta.center.x - 0.05:
            continue
        gamma = _disk(gx, r_g, r_g)
        dxv = eta.center.x - gx
        dyv = eta.center.y - r_g
        dlen = math.hypot(dxv, dyv)
        k = r_g - eta.radius
        if dlen <= abs(k) + 1e-9:
            continue
        base = math.atan2(dyv, dxv)
        off = math.acos(k / dlen)
        cands = []
        for sign in (1.0, -1.0):
            psi = base + sign * off
            n = (math.cos(psi), math.sin(psi))
            if n[1] > 1e-9:
                cands.append(n)
        if not cands:
            continue
        n = max(cands, key=lambda v: v[1])
        c_line = n[0] * gx + n[1] * r_g + r_g
        h = c_line - (n[0] * cd.x + n[1] * cd.y)
        if abs(h) >= delta.radius - 1e-6:
            continue
        half = math.sqrt(delta.radius ** 2 - h * h)
        foot = (cd.x + h * n[0], cd.y + h * n[1])
        tvec = (n[1], -n[0])
        if tvec[0] < 0:
            tvec = (-tvec[0], -tvec[1])
        if tvec[0] <= 1e-9:
            continue
        s_pt = Point(foot[0] + half * tvec[0], foot[1] + half * tvec[1])
        th_q = math.atan2(q.y - cd.y, q.x - cd.x)
        th_r = math.atan2(r_pt.y - cd.y, r_pt.x - cd.x)
        th_s = math.atan2(s_pt.y - cd.y, s_pt.x - cd.x)
        # b lives between the tangent crossing s and r, counterclockwise
        if not (-0.5 * math.pi + 0.02 < th_s < th_r - 0.02):
            continue
        th_hi = _theta_a_max(eta, delta, th_q)
        if th_hi <= -0.5 * math.pi + 0.02:
            continue
        a_pt = _arc_point(delta, -0.5 * math.pi, th_hi, s)
        b_pt = _arc_point(delta, th_s, th_r, s)
        eps = _eps_upper_left(s, a_pt, [(eta.center, eta.radius), (gamma.center, r_g)])
        return {"eta": eta, "ellp_y": H, "delta": delta, "gamma": gamma,
                "p": Point(cd.x, 0.0), "q": q, "r": r_pt, "s": s_pt,
                "a": a_pt, "b": b_pt, "eps": eps}
    raise SamplerExhaustedError("obs7 sampler")


def _validate_big(objects, tol: Tolerance):
    eta, delta, eps = objects["eta"], objects["delta"], objects["eps"]
    H = objects["ellp_y"]
    if not (0 < eta.center.y < eta.radius):
        raise HypothesisError("eta must cross the line with center above")
    if abs(H - eta.center.y - eta.radius) > tol.eps_abs:
        raise HypothesisError("ell' must be tangent to eta from above")
    if abs(delta.center.y - delta.radius) > 1e-9 * (1 + delta.radius):
        raise HypothesisError("delta must be tangent to the line from above")
    if 2.0 * delta.radius < H:
        raise HypothesisError("delta must reach ell'")
    tang = abs(math.hypot(delta.center.x - eta.center.x, delta.center.y - eta.center.y)
               - delta.radius - eta.radius)
    if tang > 1e-7 * (1 + delta.radius) or delta.center.x >= eta.center.x:
        raise HypothesisError("delta must be tangent to eta from the left")
    a_pt = objects["a"]
    if not (eps.center.x < a_pt.x and eps.center.y > a_pt.y):
        raise HypothesisError("eps center must be in the upper-left quadrant of a")
    if eps.radius < eps.center.y - tol.eps_abs:
        raise HypothesisError("eps must reach the line")


def _validate_obs5(objects, tol: Tolerance):
    _validate_big(objects, tol)
    eta, eps = objects["eta"], objects["eps"]
    gap = math.hypot(eps.center.x - eta.center.x, eps.center.y - eta.center.y)
    if gap > eps.radius + eta.radius + tol.eps_abs:
        raise HypothesisError("eps must meet eta")


def _validate_cor6(objects, tol: Tolerance):
    _validate_big(objects, tol)
    eta, etap, eps = objects["eta"], objects["etap"], objects["eps"]
    if math.hypot(etap.center.x - eta.center.x, etap.center.y - eta.center.y) \
            > eta.radius - etap.radius + tol.eps_abs:
        raise HypothesisError("eta' must be contained in eta")
    gap = math.hypot(eps.center.x - etap.center.x, eps.center.y - etap.center.y)
    if gap > eps.radius + etap.radius + tol.eps_abs:
        raise HypothesisError("eps must meet eta'")


def _validate_obs7(objects, tol: Tolerance):
    _validate_big(objects, tol)
    gamma, eps = objects["gamma"], objects["eps"]
    H = objects["ellp_y"]
    if abs(gamma.center.y - gamma.radius) > tol.eps_abs:
        raise HypothesisError("gamma must be tangent to the line from above")
    if gamma.center.y + gamma.radius >= H:
        raise HypothesisError("gamma must not reach ell'")
    if gamma.center.x >= objects["eta"].center.x:
        raise HypothesisError("gamma center must be left of eta")
    gap = math.hypot(eps.center.x - gamma.center.x, eps.center.y - gamma.center.y)
    if gap > eps.radius + gamma.radius + tol.eps_abs:
        raise HypothesisError("eps must meet gamma")
    eta = objects["eta"]
    gap = math.hypot(eps.center.x - eta.center.x, eps.center.y - eta.center.y)
    if gap > eps.radius + eta.radius + tol.eps_abs:
        raise HypothesisError("eps must meet eta")


_check_obs5 = _check_obs2
_check_cor6 = _check_obs2
_check_obs7 = _check_obs2


# -- OBS8: quadrant reach -----------------------------------------------------


def _gen_obs8(s: Stream) -> dict:
    px, py = s.uniform(-10, 10), s.uniform(-10, 10)
    cx = px - s.uniform(0.01, 5.0)
    cy = py + s.uniform(0.01, 5.0)
    zx = px + s.uniform(0.0, 5.0)
    zy = py - s.uniform(0.0, 5.0)
    need = math.hypot(cx - zx, cy - zy)
    r = need * (1.0 if s.next_float() < 0.15 else 1.0 + s.uniform(0.0, 1.0))
    return {"p": Point(px, py), "delta": _disk(cx, cy, r), "reach": Point(zx, zy)}


def _validate_obs8(objects, tol: Tolerance):
    p, delta, z = objects["p"], objects["delta"], objects["reach"]
    if not (delta.center.x <= p.x and delta.center.y >= p.y):
        raise HypothesisError("delta center must be in the upper-left quadrant of p")
    if not (z.x >= p.x and z.y <= p.y):
        raise HypothesisError("reach point must be in the lower-right quadrant of p")
    if not point_in_disk(z, delta, tol):
        raise HypothesisError("delta must reach the lower-right quadrant")


def _check_obs8(objects, tol: Tolerance) -> bool:
    return point_in_disk(objects["p"], objects["delta"], tol)


_SAMPLERS = {
    ObservationId.OBS1: _gen_obs1,
    ObservationId.OBS2_OUTSIDE_STRIP: _gen_obs2,
    ObservationId.OBS3_RADIUS: _gen_obs3,
    ObservationId.OBS4_B: _gen_obs4,
    ObservationId.OBS5_BIG: _gen_obs5,
    ObservationId.COR6_SMALLER: _gen_cor6,
    ObservationId.OBS7_5PLUS: _gen_obs7,
    ObservationId.OBS8_RAYS: _gen_obs8,
}

_VALIDATORS = {
    ObservationId.OBS1: lambda o, t: (_validate_strip(o, t), _validate_witness(o, t)),
    ObservationId.OBS2_OUTSIDE_STRIP: _validate_obs2,
    ObservationId.OBS3_RADIUS: _validate_obs3,
    ObservationId.OBS4_B: _validate_obs4,
    ObservationId.OBS5_BIG: _validate_obs5,
    ObservationId.COR6_SMALLER: _validate_cor6,
    ObservationId.OBS7_5PLUS: _validate_obs7,
    ObservationId.OBS8_RAYS: _validate_obs8,
}

_CHECKERS = {
    ObservationId.OBS1: _check_obs1,
    ObservationId.OBS2_OUTSIDE_STRIP: _check_obs2,
    ObservationId.OBS3_RADIUS: _check_obs3,
    ObservationId.OBS4_B: _check_obs4,
    ObservationId.OBS5_BIG: _check_obs5,
    ObservationId.COR6_SMALLER: _check_cor6,
    ObservationId.OBS7_5PLUS: _check_obs7,
    ObservationId.OBS8_RAYS: _check_obs8,
}


_OBS_KEY = {obs_id: 0x0B50 + i for i, obs_id in enumerate(ObservationId)}


def sample_observation(obs_id: ObservationId, seed: int) -> ObservationConfig:
    s = Stream(seed, _OBS_KEY[obs_id])
    return ObservationConfig(obs_id, _SAMPLERS[obs_id](s))


def check_observation(cfg: ObservationConfig, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Validate the hypotheses, then evaluate the observation's conclusion."""
    _VALIDATORS[cfg.obs_id](cfg.objects, tol)
    return _CHECKERS[cfg.obs_id](cfg.objects, tol)


def run_observation_suite(
    obs_id: ObservationId,
    samples: int,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
    validate_every: int = 0,
) -> VerifyReport:
    """Sample configurations and count counterexamples to the conclusion."""
    gen = _SAMPLERS[obs_id]
    conclude = _CHECKERS[obs_id]
    validate = _VALIDATORS[obs_id]
    rep = VerifyReport()
    key = _OBS_KEY[obs_id]
    for i in range(samples):
        s = Stream(seed, key, i)
        objs = gen(s)
        if validate_every and i % validate_every == 0:
            validate(objs, tol)
        if not conclude(objs, tol):
            rep.add(f"counterexample:{obs_id.value}", (i,), 1.0)
    rep.count(obs_id.value, samples)
    return rep
