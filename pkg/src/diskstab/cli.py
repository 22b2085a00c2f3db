"""Command-line surface: stab, verify, gen, render, bench, check-constants.

Exit codes: 0 success, 1 parse/input error, 2 solver or frame failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .framing import DegenerateBasisError, PivotContainsCenterError
from .geom import DEFAULT_TOL, GeometryError, Tolerance
from .instances import (
    CASE_TARGETED,
    GenProfile,
    GenerationExhaustedError,
    PROFILE_NAMES,
    ParseError,
    TANGENT_CORE,
    disks_to_obj,
    gen_instance,
    read_disks,
    read_instance,
    read_points,
    write_disks,
    write_instance,
)
from .minstab import smallest_intersecting_disk
from .proof_constants import check_proof_constants
from .stabbing import CaseTag, stab_five, stab_four
from .svg import render_svg
from .verify import verify_pairwise, verify_stab_result, verify_stabbing

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SOLVER = 2
EXIT_VERIFY = 3


def _tolerance(args) -> Tolerance:
    return Tolerance(eps_abs=args.eps_abs, eps_rel=args.eps_rel)


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_disks(path: str, tol: Tolerance):
    if path.endswith(".json"):
        return read_instance(path, tol)[0]
    return read_disks(path, tol)


def cmd_stab(args) -> int:
    tol = _tolerance(args)
    try:
        ds = _load_disks(args.input, tol)
    except (ParseError, GeometryError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    t0 = time.perf_counter()
    try:
        solver = stab_four if args.points == 4 else stab_five
        res = solver(ds, tol, args.seed)
    except (DegenerateBasisError, PivotContainsCenterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    if args.format == "structured":
        obj = {
            "points": [{"x": p.x, "y": p.y} for p in res.points],
            "case_tag": res.case_tag.value,
            "n": len(ds),
            "elapsed_ms": elapsed_ms,
        }
        _emit(json.dumps(obj) + "\n", args.output)
    else:
        lines = [f"case_tag {res.case_tag.value}", f"n {len(ds)}",
                 f"elapsed_ms {elapsed_ms:.3f}"]
        lines += [f"point {p.x:.17g} {p.y:.17g}" for p in res.points]
        _emit("\n".join(lines) + "\n", args.output)
    if args.self_verify:
        rep = verify_stab_result(ds, res)
        if not rep.ok:
            print(f"self-verify failed: {rep.violations[:5]}", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    tol = _tolerance(args)
    try:
        ds = _load_disks(args.input, tol)
        pts = read_points(args.points_file) if args.points_file else None
    except (ParseError, GeometryError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    rep = verify_pairwise(ds, tol, max_pairs=args.max_pairs)
    print(f"pairwise: {'ok' if rep.ok else 'FAIL'} ({rep.checked})")
    bad = not rep.ok
    for v in rep.violations[:20]:
        print(f"  {v.kind} {v.indices} by {v.magnitude:.3g}")
    if pts is not None:
        rep2 = verify_stabbing(ds, pts, tol)
        print(f"stabbing: {'ok' if rep2.ok else 'FAIL'} ({rep2.checked})")
        for v in rep2.violations[:20]:
            print(f"  {v.kind} {v.indices} by {v.magnitude:.3g}")
        bad = bad or not rep2.ok
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_gen(args) -> int:
    tag = CaseTag(args.tag) if args.tag else None
    try:
        profile = GenProfile(args.profile, args.n, args.seed, args.scale, tag)
        ds = gen_instance(profile)
    except (ValueError, GenerationExhaustedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    meta = {"profile": args.profile, "n": args.n, "seed": args.seed,
            "scale": args.scale}
    if tag:
        meta["tag"] = tag.value
    if args.format == "structured":
        if args.output:
            write_instance(args.output, ds, meta)
        else:
            sys.stdout.write(json.dumps(disks_to_obj(ds, meta)) + "\n")
    else:
        if args.output:
            write_disks(args.output, ds)
        else:
            for i in range(len(ds)):
                sys.stdout.write(
                    f"{ds.centers[i, 0]:.17g} {ds.centers[i, 1]:.17g} "
                    f"{ds.radii[i]:.17g}\n"
                )
    return EXIT_OK


def cmd_render(args) -> int:
    tol = _tolerance(args)
    try:
        ds = _load_disks(args.input, tol)
        pts = read_points(args.points_file) if args.points_file else []
    except (ParseError, GeometryError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    dstar = None
    tangents = ()
    if args.show_dstar or args.show_tangents:
        try:
            ms = smallest_intersecting_disk(ds, tol, args.seed)
            dstar = ms.dstar
            if args.show_tangents and ms.optimal_value > tol.eps_abs and len(ms.basis) == 3:
                from .framing import build_base_frame
                from .geom import Point, apply_similarity, invert, make_line

                bf = build_base_frame(ds, ms, tol)
                back = invert(bf.to_frame)
                tangents = []
                for ln in bf.tangent_lines:
                    # map two points of the frame line back and rebuild it
                    p0 = apply_similarity(back, Point(ln.nx * ln.c - ln.ny,
                                                      ln.ny * ln.c + ln.nx))
                    p1 = apply_similarity(back, Point(ln.nx * ln.c + ln.ny,
                                                      ln.ny * ln.c - ln.nx))
                    nx, ny = p1.y - p0.y, p0.x - p1.x
                    tangents.append(make_line(nx, ny, nx * p0.x + ny * p0.y))
        except (DegenerateBasisError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_SOLVER
    try:
        _emit(render_svg(ds, pts, dstar, tangents), args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    times = []
    print(f"{'n':>9}  {'gen_s':>8}  {'stab_s':>8}  case_tag")
    for n in sizes:
        t0 = time.perf_counter()
        ds = gen_instance(GenProfile(TANGENT_CORE, n, args.seed))
        t_gen = time.perf_counter() - t0
        t0 = time.perf_counter()
        res = stab_four(ds, DEFAULT_TOL, args.seed)
        t_stab = time.perf_counter() - t0
        times.append(t_stab)
        print(f"{n:>9}  {t_gen:>8.4f}  {t_stab:>8.4f}  {res.case_tag.value}")
    if len(sizes) > 1:
        slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
        print(f"fitted log-log growth exponent: {slope:.3f}")
    return EXIT_OK


def cmd_check_constants(_args) -> int:
    rep = check_proof_constants()
    for name in sorted(rep.checked):
        print(f"checked {name}: {rep.checked[name]}")
    if rep.ok:
        print("all constant systems match their closed forms")
        return EXIT_OK
    for v in rep.violations:
        print(f"MISMATCH {v.kind}: off by {v.magnitude:.3g}")
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="diskstab",
                                 description="Stab pairwise intersecting disks "
                                             "with at most four or five points.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--eps-abs", type=float, default=DEFAULT_TOL.eps_abs)
        p.add_argument("--eps-rel", type=float, default=DEFAULT_TOL.eps_rel)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("stab", help="compute stabbing points for a disk file")
    p.add_argument("--input", required=True)
    p.add_argument("--points", type=int, choices=(4, 5), default=4)
    p.add_argument("--self-verify", action="store_true")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--output")
    common(p)
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("verify", help="check pairwise intersection / stabbing")
    p.add_argument("--input", required=True)
    p.add_argument("--points-file")
    p.add_argument("--max-pairs", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a pairwise-intersecting instance")
    p.add_argument("--profile", choices=PROFILE_NAMES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--tag", choices=[t.value for t in CaseTag], default=None)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--output")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="emit an SVG of disks and points")
    p.add_argument("--input", required=True)
    p.add_argument("--points-file")
    p.add_argument("--show-dstar", action="store_true")
    p.add_argument("--show-tangents", action="store_true")
    p.add_argument("--output")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="time the four-point pipeline over sizes")
    p.add_argument("--sizes", default="1000,10000,100000,1000000")
    common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("check-constants", help="reproduce analysis constants")
    common(p)
    p.set_defaults(func=cmd_check_constants)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
