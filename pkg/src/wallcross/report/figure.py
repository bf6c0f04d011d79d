"""SVG drawing of walls, sample points and their images in the Poincare disk.

Walls are geodesics: the Klein chord a u + b v = c and the Poincare arc share
their ideal endpoints, and the arc lies on the circle of radius 1/c centred at
(a, b)/c.  Floats appear only here, always printed with 6 decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..chambers import ChamberPoint, Wall, enumerate_walls, poincare_to_hyperboloid
from ..crossing import image_point, segment_crossings_oracle
from ..errors import OutsideDisk
from ..lattice import SIGMA_MINUS, SIGMA_PLUS, LatticeClass, compose_word

PATH_SAMPLES = 64


@dataclass(frozen=True)
class FigureSpec:
    wall_c_max: int = 13
    points: Sequence[tuple[str, tuple[Fraction, Fraction]]] = ()
    words: Sequence[Sequence[LatticeClass]] = ()
    width: int = 600
    height: int = 600
    radius: int = 280

    def __post_init__(self):
        for label, (u, v) in self.points:
            if Fraction(u) ** 2 + Fraction(v) ** 2 >= 1:
                raise OutsideDisk(f"point {label} = ({u},{v}) is not inside the unit disk")


def reference_figure_spec(wall_c_max: int = 13) -> FigureSpec:
    return FigureSpec(
        wall_c_max=wall_c_max,
        points=(("+", (Fraction(0), Fraction(0))), ("o", (Fraction(-1, 2), Fraction(-1, 2)))),
        words=((SIGMA_MINUS, SIGMA_PLUS),),
    )


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _klein_to_poincare(u: float, v: float) -> tuple[float, float]:
    scale = 1.0 / (1.0 + math.sqrt(max(0.0, 1.0 - u * u - v * v)))
    return u * scale, v * scale


def _word_label(word) -> str:
    names = {SIGMA_PLUS: "+", SIGMA_MINUS: "-"}
    return "".join(names.get(w, str(w)) for w in word) or "id"


class _Canvas:
    def __init__(self, spec: FigureSpec):
        self.cx = spec.width / 2
        self.cy = spec.height / 2
        self.r = spec.radius

    def xy(self, u: float, v: float) -> tuple[str, str]:
        return _fmt(self.cx + self.r * u), _fmt(self.cy - self.r * v)


def _wall_arc(w: Wall, canvas: _Canvas) -> list[str]:
    a, b, c = w.a, w.b, w.c
    n2 = c * c + 1
    p1 = ((c * a + b) / n2, (c * b - a) / n2)
    p2 = ((c * a - b) / n2, (c * b + a) / n2)
    centre = (a / c, b / c)
    cross = (p1[0] - centre[0]) * (p2[1] - centre[1]) - (p1[1] - centre[1]) * (p2[0] - centre[0])
    # y is flipped on screen, so a counterclockwise arc becomes sweep=1
    sweep = 1 if cross > 0 else 0
    rad = _fmt(canvas.r / c)
    x1, y1 = canvas.xy(*p1)
    x2, y2 = canvas.xy(*p2)
    nearest = (math.sqrt(n2) - 1) / c
    norm = math.hypot(a, b)
    lx, ly = canvas.xy(nearest * a / norm, nearest * b / norm)
    return [
        f'<path class="wall" data-wall="{w.label}" d="M {x1} {y1} A {rad} {rad} 0 0 {sweep} {x2} {y2}"/>',
        f'<text class="wall-label" x="{lx}" y="{ly}">{w.label}</text>',
    ]


def _point(label: str, uv, canvas: _Canvas) -> list[str]:
    x, y = canvas.xy(float(uv[0]), float(uv[1]))
    return [
        f'<circle class="point" data-label="{label}" cx="{x}" cy="{y}" r="3"/>',
        f'<text class="point-label" x="{x}" y="{y}" dx="5" dy="-5">{label}</text>',
    ]


def _path(p0: ChamberPoint, p1: ChamberPoint, canvas: _Canvas) -> list[str]:
    k0 = [float(t) for t in p0.klein()]
    k1 = [float(t) for t in p1.klein()]
    pts = []
    for i in range(PATH_SAMPLES + 1):
        t = i / PATH_SAMPLES
        pts.append(" ".join(canvas.xy(*_klein_to_poincare(k0[0] + t * (k1[0] - k0[0]), k0[1] + t * (k1[1] - k0[1])))))
    out = [f'<polyline class="path" points="{" ".join(pts)}"/>']
    for w, t, direction in segment_crossings_oracle(p0, p1):
        tf = float(t)
        x, y = canvas.xy(*_klein_to_poincare(k0[0] + tf * (k1[0] - k0[0]), k0[1] + tf * (k1[1] - k0[1])))
        out.append(
            f'<circle class="crossing" data-wall="{w.label}" data-direction="{direction:+d}" '
            f'cx="{x}" cy="{y}" r="2.5"/>'
        )
    return out


def render_figure(spec: FigureSpec) -> str:
    canvas = _Canvas(spec)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        "<style>.boundary{fill:none;stroke:#000;stroke-width:1.5}"
        ".wall{fill:none;stroke:#555;stroke-width:1}"
        ".wall-label{font:8px sans-serif;fill:#555}"
        ".path{fill:none;stroke:#c00;stroke-width:1.2}"
        ".point{fill:#00c}.point-label{font:10px sans-serif}"
        ".crossing{fill:#c00}</style>",
        f'<circle class="boundary" cx="{_fmt(canvas.cx)}" cy="{_fmt(canvas.cy)}" r="{_fmt(canvas.r)}"/>',
    ]
    for w in enumerate_walls(spec.wall_c_max):
        lines.extend(_wall_arc(w, canvas))
    for label, (u, v) in spec.points:
        start = poincare_to_hyperboloid(u, v)
        lines.extend(_point(label, (u, v), canvas))
        for word in spec.words:
            m = compose_word(word)
            end = image_point(m, start)
            lines.extend(_point(f"{_word_label(word)}({label})", end.poincare(), canvas))
            if end != start:
                lines.extend(_path(start, end, canvas))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
