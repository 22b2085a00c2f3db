"""Numeric reproduction of the closed-form constants behind the correctness
analysis.

Each entry re-solves a small tangency system (two or three unknowns) with a
generic root finder started from a neutral point dictated only by the stated
sign constraints, then compares against the closed form. Several entries also
assert the decimal bounds the analysis quotes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import fsolve

from .verify import VerifyReport

_SQ2 = math.sqrt(2.0)
_SQ6 = math.sqrt(6.0)
_XR = 0.5 + 2.0 * _SQ6 / 5.0  # right stabbing point abscissa, small-disk case


@dataclass(frozen=True)
class ConstantSystem:
    name: str
    residual: Callable[[Sequence[float]], Sequence[float]]
    start: tuple[float, ...]
    expected: tuple[float, ...]
    bounds: tuple[tuple[float, str, float], ...] = ()  # (value index, op, limit)


def _circle_through_two_tangent_line() -> list[ConstantSystem]:
    """Tangency systems for disks pinned by two boundary points and one line."""

    def warmup_five(v):
        # disk through (-2,0) and (0,2), tangent to the unit disk, x > 2
        x, r = v
        return (x * x + (x - 2.0) ** 2 - r * r, 2.0 * x * x - (r + 1.0) ** 2)

    def warmup_block(v):
        # smallest disk left of x=-2 avoiding (-2,0),(0,2), tangent to y=-1
        a, b, r = v
        return (b + a + 2.0, (a + 2.0) ** 2 + b * b - r * r, b + 1.0 - r)

    def small_alpha_left(v):
        a, b, r = v
        return (r - b - 1.0,
                (a + 0.5) ** 2 + b * b - r * r,
                a * a + (b - 1.7) ** 2 - r * r)

    def small_alpha_right(v):
        a, b, r = v
        return (r - b - 1.0,
                (a - 1.5) ** 2 + b * b - r * r,
                a * a + (b - 1.7) ** 2 - r * r)

    def tilted_left_upper(v):
        a, b, r = v
        return (r - b - 1.0,
                (a + 0.5) ** 2 + b * b - r * r,
                (a + 0.5) ** 2 + (b - 1.83) ** 2 - r * r)

    def tilted_left_lower(v):
        a, b, r = v
        return (r - abs(b - 1.0),
                (a + 0.5) ** 2 + b * b - r * r,
                (a - 0.5) ** 2 + (b + 2.5) ** 2 - r * r)

    def tilted_right_upper(v):
        a, b, r = v
        return (r - b - 1.0,
                (a - _XR) ** 2 + (b - 0.2) ** 2 - r * r,
                (a + 0.5) ** 2 + (b - 1.83) ** 2 - r * r)

    def tilted_right_lower(v):
        a, b, r = v
        return (r - abs(b - 1.0),
                (a - _XR) ** 2 + (b - 0.2) ** 2 - r * r,
                (a - 0.5) ** 2 + (b + 2.5) ** 2 - r * r)

    x5 = 1.5 + 3.0 / (2.0 * _SQ2)
    r5 = 0.5 + 3.0 / _SQ2
    a_ru = (10075.0 + 5660.0 * _SQ6 + math.sqrt(8490.0 * (46169.0 + 8000.0 * _SQ6))) / 8150.0
    b_ru = (13292307.0 + 3224000.0 * _SQ6
            + 960.0 * math.sqrt(1415.0 * (46169.0 + 8000.0 * _SQ6))
            + 400.0 * math.sqrt(8490.0 * (46169.0 + 8000.0 * _SQ6))) / 5313800.0
    a_rl = (27.0 + 28.0 * _SQ6 + 2.0 * math.sqrt(2310.0)) / 54.0
    b_rl = -1393.0 / 972.0 - 8.0 * math.sqrt(385.0) / 243.0
    return [
        ConstantSystem("five_point_blocker", warmup_five, (3.0, 2.0), (x5, r5)),
        ConstantSystem(
            "five_point_strip_min", warmup_block, (-4.0, 2.0, 3.0),
            (-3.0 - _SQ2, 1.0 + _SQ2, 2.0 + _SQ2),
        ),
        ConstantSystem(
            "small_alpha_left_upper", small_alpha_left, (-2.0, 1.0, 2.0),
            (-27.0 / 34.0 - (3.0 / 17.0) * math.sqrt(471.0 / 5.0),
             2919.0 / 2890.0 + 3.0 * math.sqrt(2355.0) / 289.0,
             None),
        ),
        ConstantSystem(
            "small_alpha_right_upper", small_alpha_right, (4.0, 4.0, 5.0),
            (81.0 / 34.0 + (3.0 / 17.0) * math.sqrt(771.0 / 5.0),
             6619.0 / 2890.0 + 9.0 * math.sqrt(3855.0) / 289.0,
             None),
        ),
        ConstantSystem(
            "tilted_left_upper", tilted_left_upper, (-2.0, 1.0, 2.0),
            (-0.5 - math.sqrt(283.0) / 10.0, 183.0 / 200.0, None),
        ),
        ConstantSystem(
            "tilted_left_lower", tilted_left_lower, (-3.0, -2.0, 3.0),
            (-0.9 - math.sqrt(203.0 / 2.0) / 5.0,
             -161.0 / 100.0 - math.sqrt(406.0) / 25.0,
             None),
        ),
        ConstantSystem(
            "tilted_right_upper", tilted_right_upper, (5.0, 7.0, 8.0),
            (a_ru, b_ru, None),
            bounds=((0, ">", 5.836), (1, "<", 7.51)),
        ),
        ConstantSystem(
            "tilted_right_lower", tilted_right_lower, (3.0, -2.0, 3.0),
            (a_rl, b_rl, None),
            bounds=((0, ">", 3.52), (1, ">", -2.08)),
        ),
    ]


SYSTEMS = _circle_through_two_tangent_line()


def check_proof_constants(rtol: float = 1e-9) -> VerifyReport:
    """Re-solve every constant system and compare with the closed forms."""
    rep = VerifyReport()
    for sys in SYSTEMS:
        sol, info, ier, _ = fsolve(sys.residual, sys.start, full_output=True, xtol=1e-13)
        rep.count("systems")
        if ier != 1:
            rep.add(f"{sys.name}:no_convergence", (), float(np.abs(info["fvec"]).max()))
            continue
        resid = float(np.abs(np.asarray(sys.residual(sol))).max())
        if resid > 1e-8:
            rep.add(f"{sys.name}:residual", (), resid)
        for i, want in enumerate(sys.expected):
            if want is None:
                continue
            err = abs(sol[i] - want)
            if err > rtol * max(1.0, abs(want)):
                rep.add(f"{sys.name}:value[{i}]", (i,), err)
        for idx, op, limit in sys.bounds:
            ok = sol[idx] > limit if op == ">" else sol[idx] < limit
            if not ok:
                rep.add(f"{sys.name}:bound[{idx}]{op}{limit}", (idx,), sol[idx] - limit)
    return rep
