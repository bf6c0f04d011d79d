"""Command line interface.

Exit status: 0 on success, 1 if a verification fixture fails, 2 on invalid
input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .. import errors
from ..chambers import ChamberPoint, enumerate_walls, poincare_to_hyperboloid
from ..crossing import GLUING_MULTIPLICITY, one_param_invariant, separation_crossings
from ..lattice import (
    SIGMA_MINUS,
    SIGMA_PLUS,
    Isometry,
    LatticeClass,
    alpha,
    beta,
    compose_word,
    reflect,
    reflection_matrix,
    ym_dimension,
    ym_ring,
)
from ..swside import SwContext, sw_reflection_invariant
from .figure import FigureSpec, reference_figure_spec, render_figure
from .serialize import emit_json
from .verify import run_verify

ERROR_LABELS = {
    errors.NonGenericPoint: "non-generic point",
    errors.OnWall: "point on wall",
    errors.OutsideDisk: "point outside the unit disk",
    errors.NotMinusOneClass: "not a (-1)-class",
    errors.W2NotPreserved: "w2 not preserved",
    errors.RohlinViolation: "Rohlin constraint violated",
    errors.OddBPlus: "b+ must be even",
    errors.NotOdd: "reduction coordinates must be odd",
    errors.NotForwardSheet: "not on the forward sheet",
    errors.DegenerateSegment: "degenerate segment",
    errors.MissingSymbol: "missing symbol",
}

# options whose values may begin with '-', e.g. --word "-,+"
_VALUE_FLAGS = {"--word", "--sigma", "--x", "--c", "--start", "--point", "--matrix"}


def parse_class(text: str) -> LatticeClass:
    text = text.strip()
    if text == "+":
        return SIGMA_PLUS
    if text == "-":
        return SIGMA_MINUS
    parts = text.strip("()[] ").split(",")
    if len(parts) != 3:
        raise errors.InvalidInput(f"cannot read a lattice class from {text!r}")
    try:
        return LatticeClass(*(int(p) for p in parts))
    except ValueError:
        raise errors.InvalidInput(f"cannot read a lattice class from {text!r}") from None


def parse_word(text: str) -> list[LatticeClass]:
    """'-,+' or '+, (1,-1,1), -' or '' (the identity)."""
    tokens = [t.strip().strip("()[] ") for t in text.split(",")]
    tokens = [t for t in tokens if t]
    word, i = [], 0
    while i < len(tokens):
        if tokens[i] in ("+", "-"):
            word.append(parse_class(tokens[i]))
            i += 1
        else:
            word.append(parse_class(",".join(tokens[i : i + 3])))
            i += 3
    return word


def parse_pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise errors.InvalidInput(f"expected u,v but got {text!r}")
    try:
        return Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError):
        raise errors.InvalidInput(f"cannot read rationals from {text!r}") from None


def parse_start(text: str) -> ChamberPoint:
    chart, _, coords = text.partition(":")
    if not coords:
        chart, coords = "poincare", chart
    if chart == "poincare":
        return poincare_to_hyperboloid(*parse_pair(coords))
    if chart == "hyperboloid":
        try:
            x, y, z = (Fraction(t.strip()) for t in coords.split(","))
        except ValueError:
            raise errors.InvalidInput(f"cannot read x,y,z from {coords!r}") from None
        return ChamberPoint(x, y, z)
    raise errors.InvalidInput(f"unknown chart {chart!r}; use poincare: or hyperboloid:")


def _labelled_point(text: str):
    label, sep, coords = text.partition("=")
    if not sep:
        label, coords = text, text
    return label, parse_pair(coords)


def _emit(args, payload, text: str) -> None:
    out = emit_json(payload) + "\n" if args.json else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_walls(args) -> int:
    walls = enumerate_walls(args.c_max, args.orientation)
    text = "".join(f"{w.label} eps={w.eps:+d}\n" for w in walls)
    _emit(args, walls, text)
    return 0


def cmd_reflect(args) -> int:
    sigma, x = parse_class(args.sigma), parse_class(args.x)
    image = reflect(sigma, x)
    _emit(args, {"sigma": sigma, "x": x, "image": image}, f"{image}\n")
    return 0


def parse_matrix(text: str) -> Isometry:
    try:
        entries = [int(t) for t in text.strip("[]() ").split(",")]
    except ValueError:
        raise errors.InvalidInput(f"cannot read integers from {text!r}") from None
    if len(entries) != 9:
        raise errors.InvalidInput("a matrix needs 9 row-major entries")
    m = Isometry.from_json({"matrix": entries})
    if not m.preserves_form():
        raise errors.InvalidInput("matrix does not preserve the form diag(-1,-1,1)")
    return m


def cmd_diffeo(args) -> int:
    m = parse_matrix(args.matrix) if args.matrix else compose_word(parse_word(args.word))
    c = parse_class(args.c)
    payload = {
        "isometry": m,
        "det": m.det(),
        "alpha": alpha(m),
        "beta": beta(m, c),
        "ring": ym_ring(m, c),
        "c": c,
        "image_of_c": m(c),
    }
    rows = "\n".join("  " + " ".join(f"{v:>6d}" for v in row) for row in m.matrix)
    text = (
        f"matrix:\n{rows}\n"
        f"alpha={payload['alpha']:+d} beta={payload['beta']:+d} ring={payload['ring']}\n"
        f"{c} -> {m(c)}\n"
    )
    _emit(args, payload, text)
    return 0


def cmd_invariant(args) -> int:
    m = compose_word(parse_word(args.word))
    start = parse_start(args.start)
    c = parse_class(args.c)
    report = separation_crossings(m, start, args.orientation)
    expr = one_param_invariant(m, start, args.symbol, c, args.orientation)
    payload = dict(report.to_json())
    payload.update(
        {
            "word": [w.to_json() for w in m.word],
            "doubled_contributions": [x.doubled for x in report.crossings],
            "multiplicity": GLUING_MULTIPLICITY,
            "ring": expr.ring,
            "expression": expr,
        }
    )
    lines = [f"path {report.start} -> {report.end}"]
    for x in report.crossings:
        lines.append(f"  {x.wall.label}: direction {x.direction:+d}, eps {x.wall.eps:+d}, counts {x.doubled:+d}")
    lines.append(f"gamma.W = {report.gamma_dot_W}")
    lines.append(f"D_Z = {expr}")
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def cmd_figure(args) -> int:
    if args.point or args.word:
        spec = FigureSpec(
            wall_c_max=args.c_max,
            points=tuple(_labelled_point(p) for p in args.point or ()),
            words=tuple(tuple(parse_word(w)) for w in args.word or ()),
            width=args.width,
            height=args.height,
            radius=args.radius,
        )
    else:
        spec = reference_figure_spec(args.c_max)
    svg = render_figure(spec)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_sw(args) -> int:
    a = args.alpha if args.alpha is not None else alpha(reflection_matrix(SIGMA_PLUS))
    result = sw_reflection_invariant(SwContext(args.b_plus_x, a))
    text = f"SW(f) = {result.parity} mod 2, ring {result.ring}, epsilon parity {result.epsilon_parity}\n"
    _emit(args, result, text)
    return 0


def cmd_dim(args) -> int:
    d = ym_dimension(args.p1, args.b_plus)
    _emit(args, {"p1": args.p1, "b_plus": args.b_plus, "dimension": d}, f"{d}\n")
    return 0


def cmd_verify(args) -> int:
    results = run_verify(only=args.only)
    text = "".join(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.3f}s)\n" for r in results)
    if any(not r.passed for r in results):
        text += "".join(f"  {r.name}: expected {r.expected}, got {r.actual}\n" for r in results if not r.passed)
    _emit(args, results, text)
    return 0 if all(r.passed for r in results) else 1


def _orientation(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError("homology orientation must be + or -")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit canonical JSON")
    common.add_argument(
        "--homology-orientation",
        dest="orientation",
        type=_orientation,
        default=argparse.SUPPRESS,
        help="+ (default) or -; '-' flips every wall sign",
    )
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")

    parser = argparse.ArgumentParser(prog="wallcross", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--homology-orientation", dest="orientation", type=_orientation, default=1)
    parser.add_argument("--out", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("walls", parents=[common], help="list walls up to c_max")
    p.add_argument("--c-max", type=int, required=True)
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("reflect", parents=[common], help="reflect a class in a (-1)-class")
    p.add_argument("--sigma", default="+", help="'+', '-' or a,b,c")
    p.add_argument("--x", default="0,0,1", help="class a,b,c in the basis e1,e2,s")
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("diffeo", parents=[common], help="matrix, alpha, beta and ring of a word")
    p.add_argument("--word", default="-,+")
    p.add_argument("--matrix", default=None, help="9 row-major integers, instead of --word")
    p.add_argument("--c", default="1,1,1", help="integral lift of w2")
    p.set_defaults(func=cmd_diffeo)

    p = sub.add_parser("invariant", parents=[common], help="wall crossings and D_Z of a word")
    p.add_argument("--word", default="-,+")
    p.add_argument("--start", default="poincare:0,0", help="poincare:u,v or hyperboloid:x,y,z")
    p.add_argument("--symbol", default="X0")
    p.add_argument("--c", default="1,1,1", help="integral lift of w2")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("figure", parents=[common], help="SVG of walls and paths")
    p.add_argument("--c-max", type=int, default=13)
    p.add_argument("--point", action="append", help="u,v or label=u,v (repeatable)")
    p.add_argument("--word", action="append", help="reflection word (repeatable)")
    p.add_argument("--width", type=int, default=600)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--radius", type=int, default=280)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("sw", parents=[common], help="mod 2 Seiberg-Witten invariant of a reflection")
    p.add_argument("--b-plus-x", type=int, required=True)
    p.add_argument("--alpha", type=int, choices=(1, -1), default=None)
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("dim", parents=[common], help="formal ASD moduli dimension")
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--b-plus", type=int, required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("verify", parents=[common], help="replay the reference fixtures")
    p.add_argument("--only", default=None, help="fixture name or glob")
    p.set_defaults(func=cmd_verify)
    return parser


def _join_values(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_values(argv))
    try:
        return args.func(args)
    except errors.InvalidInput as exc:
        label = next((v for k, v in ERROR_LABELS.items() if isinstance(exc, k)), "invalid input")
        print(f"error: {label}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
