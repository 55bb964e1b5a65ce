"""Command line front end: curve files, checks, transformations, plots.

Curves travel as small JSON documents:

    {"kind": "complex", "polygon": [[re, im], ...], "weights": [[re, im], ...]}
    {"kind": "real",    "polygon": [[x, y], ...],   "weights": [number, ...]}

Numbers are written with Python's shortest round-tripping repr, so a
write/read cycle reproduces every value bit for bit.  Exit codes: 0 for
success (and for "irreducible" from check), 1 for a reducible curve from
check, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

from . import algebra, gallery
from .curve import CxBezier, MobiusMap, PoleError, RealBezier

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b")
_GALLERY = {"cissoid": gallery.cissoid, "cardioid": gallery.cardioid, "lemniscate": gallery.lemniscate}


class CurveFileError(ValueError):
    """A curve file that cannot be parsed or validated."""


def _reject_constant(text: str):
    raise CurveFileError(f"non-finite number in curve file: {text}")


def _number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CurveFileError(f"{what} must be a number")
    value = float(value)
    if not math.isfinite(value):
        raise CurveFileError(f"{what} must be finite")
    return value


def _pair(value, what: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise CurveFileError(f"{what} must be a [x, y] pair")
    return _number(value[0], what), _number(value[1], what)


def load_curve(path: str) -> CxBezier | RealBezier:
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle, parse_constant=_reject_constant)
    except OSError as exc:
        raise CurveFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"{path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise CurveFileError(f"{path}: curve file must be a JSON object")
    kind = doc.get("kind")
    polygon = doc.get("polygon")
    weights = doc.get("weights")
    if kind not in ("complex", "real"):
        raise CurveFileError(f"{path}: kind must be 'complex' or 'real'")
    if not isinstance(polygon, list) or not isinstance(weights, list):
        raise CurveFileError(f"{path}: polygon and weights must be arrays")
    if len(polygon) != len(weights):
        raise CurveFileError(f"{path}: polygon and weights must have the same length")
    try:
        if kind == "complex":
            return CxBezier(
                tuple(complex(*_pair(entry, "polygon entry")) for entry in polygon),
                tuple(complex(*_pair(entry, "weight")) for entry in weights),
            )
        return RealBezier(
            tuple(_pair(entry, "point") for entry in polygon),
            tuple(_number(entry, "weight") for entry in weights),
        )
    except CurveFileError:
        raise
    except ValueError as exc:
        raise CurveFileError(f"{path}: {exc}") from exc


def save_curve(path: str, curve: CxBezier | RealBezier) -> None:
    if isinstance(curve, CxBezier):
        doc = {
            "kind": "complex",
            "polygon": [[z.real, z.imag] for z in curve.polygon],
            "weights": [[w.real, w.imag] for w in curve.weights],
        }
    else:
        doc = {
            "kind": "real",
            "polygon": [[x, y] for x, y in curve.points],
            "weights": list(curve.weights),
        }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, indent=2)
        handle.write("\n")


def _as_complex(curve: CxBezier | RealBezier) -> CxBezier:
    return CxBezier.from_real(curve) if isinstance(curve, RealBezier) else curve


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            value = complex(float(parts[0]), 0.0)
        elif len(parts) == 2:
            value = complex(float(parts[0]), float(parts[1]))
        else:
            raise ValueError
    except ValueError:
        raise CurveFileError(f"cannot parse complex number {text!r}, expected 're,im'") from None
    if not cmath.isfinite(value):
        raise CurveFileError(f"complex parameter {text!r} must be finite")
    return value


def cmd_reduce(args) -> int:
    curve = _as_complex(load_curve(args.infile))
    reduced = curve.reduce()
    save_curve(args.outfile, reduced)
    print(f"degree: {curve.degree} -> {reduced.degree}")
    return 0


def cmd_check(args) -> int:
    curve = _as_complex(load_curve(args.infile))
    irreducible = curve.is_irreducible()
    value = algebra.resultant_bernstein(curve.numerator(), curve.denominator())
    print(f"degree: {curve.degree}")
    print(f"irreducible: {'yes' if irreducible else 'no'}")
    print(f"resultant modulus: {abs(value):.6g}")
    if curve.degree == 3:
        print(f"conic: {'yes' if curve.is_conic_cubic() else 'no'}")
    return 0 if irreducible else 1


def cmd_convert(args) -> int:
    curve = load_curve(args.infile)
    if args.direction == "to-real":
        if not isinstance(curve, CxBezier):
            raise CurveFileError("to-real needs a complex curve file")
        save_curve(args.outfile, curve.to_real())
        return 0
    if not isinstance(curve, RealBezier):
        raise CurveFileError("to-complex needs a real curve file")
    result = CxBezier.from_real(curve)
    if args.reduce:
        result = result.reduce()
    save_curve(args.outfile, result)
    return 0


def cmd_transform(args) -> int:
    curve = load_curve(args.infile)
    if not isinstance(curve, CxBezier):
        raise CurveFileError("transform needs a complex curve file")
    if args.mobius is not None:
        a, b, c, d = (_parse_complex(text) for text in args.mobius)
        result = curve.mobius_image(MobiusMap(a, b, c, d))
    elif args.invert:
        result = curve.invert()
    elif args.elevate is not None:
        alpha, beta = (_parse_complex(text) for text in args.elevate)
        result = curve.degree_elevate(alpha, beta)
    elif args.reparam is not None:
        result = curve.reparametrize(args.reparam)
    else:
        result = curve.scale_weights(_parse_complex(args.scale))
    save_curve(args.outfile, result)
    return 0


def _sample(curve: CxBezier, t0: float, t1: float, count: int) -> list[tuple[float, complex | None]]:
    step = (t1 - t0) / (count - 1)
    rows = []
    for i in range(count):
        t = t0 + step * i
        try:
            rows.append((t, curve.evaluate(t)))
        except PoleError:
            rows.append((t, None))
    return rows


def _fmt(value: float) -> str:
    return format(value, ".6g")


def _svg_document(curves: list[CxBezier], sampled: list[list[tuple[float, complex | None]]]) -> str:
    # SVG's y axis points down, so the imaginary part is negated throughout
    xs = [v.real for rows in sampled for _, v in rows if v is not None]
    ys = [-v.imag for rows in sampled for _, v in rows if v is not None]
    x_min, x_max = min(xs), max(xs)
    y_min, y_max = min(ys), max(ys)
    pad = 0.1 * max(x_max - x_min, y_max - y_min)
    if pad == 0.0:
        pad = 1.0
    width = (x_max - x_min) + 2 * pad
    height = (y_max - y_min) + 2 * pad
    stroke = 0.004 * max(width, height)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x_min - pad)} {_fmt(y_min - pad)} {_fmt(width)} {_fmt(height)}">',
    ]
    for index, (curve, rows) in enumerate(zip(curves, sampled)):
        color = _PALETTE[index % len(_PALETTE)]
        corners = " L ".join(f"{_fmt(z.real)} {_fmt(-z.imag)}" for z in curve.polygon)
        lines.append(
            f'<path d="M {corners}" fill="none" stroke="#999999" '
            f'stroke-width="{_fmt(stroke)}" stroke-dasharray="{_fmt(4 * stroke)} {_fmt(4 * stroke)}"/>'
        )
        for z in curve.polygon:
            lines.append(
                f'<circle cx="{_fmt(z.real)}" cy="{_fmt(-z.imag)}" r="{_fmt(2.5 * stroke)}" fill="#999999"/>'
            )
        pieces = []
        run: list[str] = []
        for _, value in rows + [(0.0, None)]:
            if value is None:
                if len(run) >= 2:
                    pieces.append("M " + " L ".join(run))
                run = []
            else:
                run.append(f"{_fmt(value.real)} {_fmt(-value.imag)}")
        if pieces:
            lines.append(
                f'<path d="{" ".join(pieces)}" fill="none" stroke="{color}" '
                f'stroke-width="{_fmt(1.5 * stroke)}"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_render(args) -> int:
    if args.samples < 2:
        raise CurveFileError("need at least two samples")
    curves = [_as_complex(load_curve(path)) for path in args.infiles]
    sampled = [_sample(curve, args.t0, args.t1, args.samples) for curve in curves]
    if all(value is None for rows in sampled for _, value in rows):
        raise CurveFileError("every sample hit a pole")
    if args.csv is not None:
        if len(curves) > 1:
            raise CurveFileError("CSV output supports a single input file")
        with open(args.csv, "w", encoding="utf-8") as handle:
            handle.write("t,x,y\n")
            for t, value in sampled[0]:
                if value is not None:
                    handle.write(f"{t!r},{value.real!r},{value.imag!r}\n")
        return 0
    with open(args.svg, "w", encoding="utf-8") as handle:
        handle.write(_svg_document(curves, sampled))
    return 0


def cmd_gallery(args) -> int:
    conic, inverted = _GALLERY[args.name](args.a)
    save_curve(args.out_conic, conic)
    save_curve(args.out_inverted, inverted)
    print(f"wrote {args.out_conic} and {args.out_inverted}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cxbezier",
        description="Rational complex Bezier plane curves: reduce, check, convert, transform, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("reduce", help="cancel common numerator/denominator factors")
    cmd.add_argument("infile")
    cmd.add_argument("outfile")
    cmd.set_defaults(func=cmd_reduce)

    cmd = sub.add_parser("check", help="report irreducibility (exit 0) or reducibility (exit 1)")
    cmd.add_argument("infile")
    cmd.set_defaults(func=cmd_check)

    cmd = sub.add_parser("convert", help="switch between complex and real curve files")
    cmd.add_argument("direction", choices=("to-real", "to-complex"))
    cmd.add_argument("infile")
    cmd.add_argument("outfile")
    cmd.add_argument("--reduce", action="store_true", help="reduce after to-complex conversion")
    cmd.set_defaults(func=cmd_convert)

    cmd = sub.add_parser("transform", help="apply one transformation to a complex curve")
    cmd.add_argument("infile")
    cmd.add_argument("outfile")
    group = cmd.add_mutually_exclusive_group(required=True)
    group.add_argument("--mobius", nargs=4, metavar=("A", "B", "C", "D"),
                       help="map z -> (C + D z)/(A + B z); parameters as 're,im'")
    group.add_argument("--invert", action="store_true", help="unit inversion z -> 1/z")
    group.add_argument("--elevate", nargs=2, metavar=("ALPHA", "BETA"),
                       help="degree elevation factor alpha*(1-t) + beta*t; parameters as 're,im'")
    group.add_argument("--reparam", type=float, metavar="RHO",
                       help="rational reparametrization with positive factor RHO")
    group.add_argument("--scale", metavar="LAMBDA", help="multiply all weights by LAMBDA ('re,im')")
    cmd.set_defaults(func=cmd_transform)

    cmd = sub.add_parser("render", help="sample curves to CSV or SVG")
    cmd.add_argument("infiles", nargs="+")
    cmd.add_argument("--samples", type=int, default=200, help="number of uniform samples (default 200)")
    out = cmd.add_mutually_exclusive_group(required=True)
    out.add_argument("--svg", metavar="PATH")
    out.add_argument("--csv", metavar="PATH")
    cmd.add_argument("--t0", type=float, default=0.0)
    cmd.add_argument("--t1", type=float, default=1.0)
    cmd.set_defaults(func=cmd_render)

    cmd = sub.add_parser("gallery", help="write a classical conic/inverse pair of curve files")
    cmd.add_argument("name", choices=sorted(_GALLERY))
    cmd.add_argument("out_conic")
    cmd.add_argument("out_inverted")
    cmd.add_argument("--a", type=float, default=1.0, help="shape parameter (default 1)")
    cmd.set_defaults(func=cmd_gallery)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # CurveFileError and library validation errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
