"""Minimal SVG 1.1 emitter for disk scenes and stabbing points."""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .geom import Disk, DiskSet, Line, Point

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{vb}">\n'
)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def render_svg(
    disks: DiskSet,
    points: Sequence[Point] = (),
    dstar: Optional[Disk] = None,
    tangent_lines: Sequence[Line] = (),
) -> str:
    """Standalone SVG: disks stroked, points filled, the optimal disk dashed.

    The viewBox fits all geometry with a 5% margin; an empty scene gets the
    default "0 0 1 1". The y-axis is flipped so the picture matches plane
    coordinates.
    """
    xs: list[float] = []
    ys: list[float] = []
    for i in range(len(disks)):
        cx, cy, r = disks.centers[i, 0], disks.centers[i, 1], disks.radii[i]
        xs += [cx - r, cx + r]
        ys += [cy - r, cy + r]
    for p in points:
        xs.append(p.x)
        ys.append(p.y)
    if dstar is not None:
        xs += [dstar.center.x - dstar.radius, dstar.center.x + dstar.radius]
        ys += [dstar.center.y - dstar.radius, dstar.center.y + dstar.radius]

    if not xs:
        vb = "0 0 1 1"
        span = 1.0
        ymin = ymax = 0.0
    else:
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        w = max(xmax - xmin, 1e-9)
        h = max(ymax - ymin, 1e-9)
        mx, my = 0.05 * w, 0.05 * h
        vb = f"{_fmt(xmin - mx)} {_fmt(-(ymax + my))} {_fmt(w + 2 * mx)} {_fmt(h + 2 * my)}"
        span = max(w, h)

    sw = span / 400.0
    out = [_HEADER.format(vb=vb), '<g transform="scale(1,-1)">\n']
    for i in range(len(disks)):
        out.append(
            f'<circle cx="{_fmt(disks.centers[i, 0])}" cy="{_fmt(disks.centers[i, 1])}" '
            f'r="{_fmt(disks.radii[i])}" fill="none" stroke="black" '
            f'stroke-width="{_fmt(sw)}"/>\n'
        )
    if dstar is not None:
        out.append(
            f'<circle cx="{_fmt(dstar.center.x)}" cy="{_fmt(dstar.center.y)}" '
            f'r="{_fmt(max(dstar.radius, 2 * sw))}" fill="none" stroke="blue" '
            f'stroke-width="{_fmt(sw)}" stroke-dasharray="{_fmt(4 * sw)} {_fmt(4 * sw)}"/>\n'
        )
    for line in tangent_lines:
        # clip the infinite line to a segment spanning the scene
        px, py = line.nx * line.c, line.ny * line.c
        tx, ty = -line.ny, line.nx
        L = 2.0 * span
        out.append(
            f'<line x1="{_fmt(px - L * tx)}" y1="{_fmt(py - L * ty)}" '
            f'x2="{_fmt(px + L * tx)}" y2="{_fmt(py + L * ty)}" '
            f'stroke="green" stroke-width="{_fmt(sw)}"/>\n'
        )
    for p in points:
        out.append(
            f'<circle cx="{_fmt(p.x)}" cy="{_fmt(p.y)}" r="{_fmt(3 * sw)}" fill="red"/>\n'
        )
    out.append("</g>\n</svg>\n")
    return "".join(out)
