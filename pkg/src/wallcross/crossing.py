"""Signed wall crossings and the 1-parameter invariant they determine.

Walls are pairwise disjoint separating geodesics, so the net signed count of
crossings along any generic path from p0 to M p0 is determined by which walls
separate the two endpoints.  ``separation_crossings`` uses exactly that;
``segment_crossings_oracle`` instead intersects the straight Klein segment with
each chord and is kept as an independent check (and to order crossings for
drawing).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .chambers import ChamberPoint, Wall, enumerate_walls, wall_bound, walls_negative_at
from .errors import DegenerateSegment, MissingSymbol, NonGenericPoint, NotForwardSheet
from .lattice import W2_LIFT, CoefficientRing, Isometry, LatticeClass, ym_ring

# Euler number of T S^2: local count of each gluing solution at a wall
GLUING_MULTIPLICITY = 2


@dataclass(frozen=True)
class Crossing:
    wall: Wall
    direction: int

    @property
    def contribution(self) -> int:
        return self.wall.eps * self.direction

    @property
    def doubled(self) -> int:
        return GLUING_MULTIPLICITY * self.contribution

    def to_json(self) -> dict:
        return {
            "wall": self.wall.to_json(),
            "direction": self.direction,
            "contribution": self.contribution,
            "doubled": self.doubled,
        }


@dataclass(frozen=True)
class CrossingReport:
    start: ChamberPoint
    end: ChamberPoint
    crossings: tuple[Crossing, ...] = ()

    @property
    def gamma_dot_W(self) -> int:
        return sum(x.contribution for x in self.crossings)

    @property
    def doubled_total(self) -> int:
        return GLUING_MULTIPLICITY * self.gamma_dot_W

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "end": self.end.to_json(),
            "crossings": [x.to_json() for x in self.crossings],
            "gamma_dot_W": self.gamma_dot_W,
            "doubled_total": self.doubled_total,
        }

    @classmethod
    def from_json(cls, data: dict) -> CrossingReport:
        crossings = tuple(
            Crossing(Wall.from_json(x["wall"]), int(x["direction"])) for x in data["crossings"]
        )
        report = cls(ChamberPoint.from_json(data["start"]), ChamberPoint.from_json(data["end"]), crossings)
        if "gamma_dot_W" in data and data["gamma_dot_W"] != report.gamma_dot_W:
            raise ValueError("gamma_dot_W does not match the listed crossings")
        return report


def image_point(m: Isometry, p: ChamberPoint) -> ChamberPoint:
    x, y, z = m.act((p.x, p.y, p.z))
    if z <= 0:
        raise NotForwardSheet(f"image {(x, y, z)} of {p} is on the backward sheet")
    return ChamberPoint(x, y, z)


def separating_walls(p0: ChamberPoint, p1: ChamberPoint, orientation: int = 1) -> list[Crossing]:
    """Walls whose sign differs at p0 and p1, in (c, a, b) order.

    A wall separates the endpoints iff exactly one of them lies on its
    negative side, so only the two (small) negative sets are enumerated.
    """
    negative = []
    for where in (p0, p1):
        walls = walls_negative_at(where, orientation)
        for w in walls:
            if w.value(where) == 0:
                raise NonGenericPoint(f"{where} lies on {w.label}", wall=w)
        negative.append({w.key: w for w in walls})
    neg0, neg1 = negative
    return [
        Crossing(neg0[key], 1) if key in neg0 else Crossing(neg1[key], -1)
        for key in sorted(neg0.keys() ^ neg1.keys())
    ]


def separation_crossings(m: Isometry, p0: ChamberPoint, orientation: int = 1) -> CrossingReport:
    end = image_point(m, p0)
    return CrossingReport(p0, end, tuple(separating_walls(p0, end, orientation)))


def segment_crossings_oracle(
    p0: ChamberPoint, p1: ChamberPoint, orientation: int = 1
) -> list[tuple[Wall, Fraction, int]]:
    """Crossings of the straight Klein segment from p0 to p1, ordered by the
    segment parameter t in (0, 1).

    Along the segment a chord's defining function c - a u - b v is affine in
    t; the crossing parameter is its root and the direction is the sign of its
    slope.
    """
    if p0 == p1:
        raise DegenerateSegment("segment endpoints coincide")
    X0, Y0, Z0 = p0.integer_coords()
    X1, Y1, Z1 = p1.integer_coords()
    found = []
    for w in enumerate_walls(wall_bound(p0, p1), orientation):
        # Klein values f0 = F0 / Z0, f1 = F1 / Z1
        F0 = w.c * Z0 - w.a * X0 - w.b * Y0
        F1 = w.c * Z1 - w.a * X1 - w.b * Y1
        if F0 == 0 or F1 == 0:
            raise NonGenericPoint(f"segment endpoint lies on {w.label}", wall=w)
        drop = F0 * Z1 - F1 * Z0  # f0 - f1, scaled by Z0 Z1 > 0
        if drop == 0:
            continue
        num = F0 * Z1
        if (0 < num < drop) or (drop < num < 0):
            found.append((w, Fraction(num, drop), -1 if drop > 0 else 1))
    found.sort(key=lambda item: (item[1], item[0].key))
    return found


# ---------------------------------------------------------------------------
# formal invariants


@dataclass(frozen=True)
class InvariantExpression:
    """Formal combination sum(coeff * D_symbol) over Z or Z2."""

    terms: Mapping[str, int] = field(default_factory=dict)
    ring: CoefficientRing = CoefficientRing.Z

    def __post_init__(self):
        ring = CoefficientRing(self.ring)
        terms = {}
        for symbol, coeff in self.terms.items():
            coeff = int(coeff)
            if ring is CoefficientRing.Z2:
                coeff %= 2
            if coeff:
                terms[str(symbol)] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", dict(sorted(terms.items())))

    def __add__(self, other: InvariantExpression) -> InvariantExpression:
        return invariant_add(self, other)

    def __neg__(self) -> InvariantExpression:
        return invariant_negate(self)

    def __sub__(self, other: InvariantExpression) -> InvariantExpression:
        return invariant_add(self, invariant_negate(other))

    def to_json(self) -> dict:
        return {"ring": self.ring.value, "terms": dict(self.terms)}

    @classmethod
    def from_json(cls, data: dict) -> InvariantExpression:
        return cls(dict(data["terms"]), CoefficientRing(data["ring"]))

    def __str__(self):
        if not self.terms:
            return f"0 (over {self.ring})"
        parts = " + ".join(f"{k}*D_{s}" for s, k in self.terms.items())
        return f"{parts} (over {self.ring})"


def invariant_add(e1: InvariantExpression, e2: InvariantExpression) -> InvariantExpression:
    terms = dict(e1.terms)
    for symbol, coeff in e2.terms.items():
        terms[symbol] = terms.get(symbol, 0) + coeff
    return InvariantExpression(terms, e1.ring.join(e2.ring))


def invariant_negate(e: InvariantExpression) -> InvariantExpression:
    return InvariantExpression({s: -k for s, k in e.terms.items()}, e.ring)


def evaluate(e: InvariantExpression, values: Mapping[str, int]) -> int:
    missing = sorted(set(e.terms) - set(values))
    if missing:
        raise MissingSymbol(f"no value given for {', '.join(missing)}")
    total = sum(k * int(values[s]) for s, k in e.terms.items())
    return total % 2 if e.ring is CoefficientRing.Z2 else total


def one_param_invariant(
    m: Isometry,
    p0: ChamberPoint,
    symbol: str = "X",
    c: LatticeClass = W2_LIFT,
    orientation: int = 1,
) -> InvariantExpression:
    """D_Z(f) = 2 (gamma . W) D_symbol, in the ring fixed by alpha * beta."""
    ring = ym_ring(m, c)
    report = separation_crossings(m, p0, orientation)
    return InvariantExpression({symbol: GLUING_MULTIPLICITY * report.gamma_dot_W}, ring)
