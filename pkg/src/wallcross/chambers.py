"""The chamber space and its walls.

The chamber space is the forward sheet z^2 - x^2 - y^2 = 1, z > 0 of the
hyperboloid in H^2(N; R), coordinates again in the basis (e1, e2, s).  A wall
W(a, b, c) is the geodesic {c z - a x - b y = 0} attached to a reduction
(a, b, c): c > 0, all odd, c^2 - a^2 - b^2 = -1.

Rational points are entered through the Poincare disk, where they lift to
rational hyperboloid points.  In the Klein chart the walls become straight
chords c - a u - b v = 0.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
import math
from math import isqrt, lcm
from typing import Union

import numpy as np

from .errors import InvalidInput, NotForwardSheet, NotOdd, OnWall, OutsideDisk
from .lattice import LatticeClass

Rational = Union[int, Fraction]


def _parity_sign(exponent: int) -> int:
    return -1 if abs(exponent) % 2 else 1


def epsilon(a: int, b: int, c: int) -> int:
    """Orientation sign of the reduction (a, b, c) relative to (1, 1, 1)."""
    if a % 2 == 0 or b % 2 == 0 or c % 2 == 0:
        raise NotOdd(f"epsilon needs odd a, b, c, got ({a},{b},{c})")
    return _parity_sign(((c - 1) // 2) ** 2 - ((a - 1) // 2) ** 2 - ((b - 1) // 2) ** 2)


@dataclass(frozen=True, slots=True)
class Wall:
    a: int
    b: int
    c: int
    eps: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if c <= 0 or c * c - a * a - b * b != -1 or not (a % 2 and b % 2 and c % 2):
            raise InvalidInput(f"({a},{b},{c}) is not a reduction")
        if self.eps not in (1, -1):
            raise InvalidInput(f"wall sign must be +1 or -1, got {self.eps}")

    @classmethod
    def of(cls, a: int, b: int, c: int, orientation: int = 1) -> Wall:
        """The wall for (a, b, c) with its epsilon sign, optionally flipped by
        a reversed homology orientation."""
        return cls(a, b, c, orientation * epsilon(a, b, c))

    def flipped(self) -> Wall:
        return replace(self, eps=-self.eps)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.c, self.a, self.b)

    @property
    def reduction(self) -> LatticeClass:
        return LatticeClass(self.a, self.b, self.c)

    def value(self, p: ChamberPoint) -> Fraction:
        return self.c * p.z - self.a * p.x - self.b * p.y

    @property
    def label(self) -> str:
        return f"W({self.a},{self.b},{self.c})"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "eps": self.eps}

    @classmethod
    def from_json(cls, data: dict) -> Wall:
        return cls(int(data["a"]), int(data["b"]), int(data["c"]), int(data["eps"]))

    def __str__(self):
        return self.label


@dataclass(frozen=True, slots=True)
class ChamberPoint:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.z <= 0:
            raise NotForwardSheet(f"z = {self.z} is not positive")
        if self.z * self.z - self.x * self.x - self.y * self.y != 1:
            raise InvalidInput(f"({self.x},{self.y},{self.z}) is not on z^2 - x^2 - y^2 = 1")

    @classmethod
    def from_triple(cls, v) -> ChamberPoint:
        return cls(*v)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def klein(self) -> tuple[Fraction, Fraction]:
        return (self.x / self.z, self.y / self.z)

    def poincare(self) -> tuple[Fraction, Fraction]:
        return (self.x / (1 + self.z), self.y / (1 + self.z))

    def integer_coords(self) -> tuple[int, int, int]:
        """A positive integer multiple (X, Y, Z) of the point."""
        d = lcm(self.x.denominator, self.y.denominator, self.z.denominator)
        return (int(self.x * d), int(self.y * d), int(self.z * d))

    def to_json(self) -> dict:
        return {"x": str(self.x), "y": str(self.y), "z": str(self.z)}

    @classmethod
    def from_json(cls, data: dict) -> ChamberPoint:
        return cls(Fraction(data["x"]), Fraction(data["y"]), Fraction(data["z"]))

    def __str__(self):
        return f"({self.x},{self.y},{self.z})"


ORIGIN = ChamberPoint(0, 0, 1)


def poincare_to_hyperboloid(u: Rational, v: Rational) -> ChamberPoint:
    u, v = Fraction(u), Fraction(v)
    r2 = u * u + v * v
    if r2 >= 1:
        raise OutsideDisk(f"({u},{v}) is not inside the unit disk")
    d = 1 - r2
    return ChamberPoint(2 * u / d, 2 * v / d, (1 + r2) / d)


def klein_coords(p: ChamberPoint) -> tuple[Fraction, Fraction]:
    return p.klein()


def wall_sign(w: Wall, p: ChamberPoint) -> int:
    value = w.value(p)
    if value == 0:
        raise OnWall(f"{p} lies on {w.label}")
    return 1 if value > 0 else -1


def wall_bound(p0: ChamberPoint, p1: ChamberPoint) -> int:
    """Largest c for which a wall can separate p0 from p1.

    The Klein chord of W(a, b, c) sits at distance c / sqrt(c^2 + 1) from the
    origin, so it misses the Klein segment [p0, p1] once c^2 > r^2 / (1 - r^2),
    r being the larger Klein radius of the endpoints.  On the hyperboloid
    r^2 / (1 - r^2) is just x^2 + y^2.
    """
    q = max(p.x * p.x + p.y * p.y for p in (p0, p1))
    return isqrt(q.numerator // q.denominator)


# ---------------------------------------------------------------------------
# wall enumeration

_FLOAT_SAFE_C = 1 << 25


def _representations(c: int) -> list[tuple[int, int]]:
    """All (a, b) with a, b odd and positive and a^2 + b^2 = c^2 + 1."""
    n = c * c + 1
    if c < _FLOAT_SAFE_C:
        a = np.arange(1, c + 1, 2, dtype=np.int64)
        b2 = n - a * a
        b = np.floor(np.sqrt(b2.astype(np.float64))).astype(np.int64)
        b -= b * b > b2
        b += (b + 1) * (b + 1) <= b2
        hit = (b * b == b2) & (b > 0)
        return [(int(x), int(y)) for x, y in zip(a[hit], b[hit])]
    out = []
    for x in range(1, c + 1, 2):
        y = isqrt(n - x * x)
        if y > 0 and y * y == n - x * x:
            out.append((x, y))
    return out


def _walls_with_c(c: int) -> list[Wall]:
    walls = []
    for a, b in _representations(c):
        # odd a forces odd b since c^2 + 1 = 2 mod 8
        for sa in (1, -1):
            for sb in (1, -1):
                walls.append(Wall.of(sa * a, sb * b, c))
    walls.sort(key=lambda w: w.key)
    return walls


class _WallCache:
    def __init__(self):
        self._lock = threading.Lock()
        self._walls: list[Wall] = []
        self._cs: list[int] = []
        self._covered = 0

    def upto(self, c_max: int) -> list[Wall]:
        if c_max > self._covered:
            with self._lock:
                start = self._covered + 1
                if start % 2 == 0:
                    start += 1
                for c in range(start, c_max + 1, 2):
                    batch = _walls_with_c(c)
                    self._walls.extend(batch)
                    self._cs.extend(w.c for w in batch)
                self._covered = max(self._covered, c_max)
        return self._walls[: bisect_right(self._cs, c_max)]


_CACHE = _WallCache()


def enumerate_walls(c_max: int, orientation: int = 1) -> list[Wall]:
    """Every wall with c <= c_max, sorted by (c, a, b)."""
    if c_max < 0:
        raise InvalidInput("c_max must be non-negative")
    walls = _CACHE.upto(c_max)
    if orientation == -1:
        return [w.flipped() for w in walls]
    return list(walls)


def walls_disjoint_check(c_max: int) -> bool:
    """True iff no two distinct walls with c <= c_max meet inside the disk.

    Intersections are tested on the Klein chords a u + b v = c in integers:
    the lines meet at (c1 b2 - c2 b1, a1 c2 - a2 c1) / det.
    """
    walls = enumerate_walls(c_max)
    for w1, w2 in combinations(walls, 2):
        det = w1.a * w2.b - w2.a * w1.b
        if det == 0:
            continue
        nu = w1.c * w2.b - w2.c * w1.b
        nv = w1.a * w2.c - w2.a * w1.c
        if nu * nu + nv * nv < det * det:
            return False
    return True


def _cos_range(lo: float, hi: float) -> tuple[float, float]:
    """Min and max of cos over the angle interval [lo, hi]."""
    vals = [math.cos(lo), math.cos(hi)]
    k = math.ceil(lo / math.pi)
    while k * math.pi <= hi:
        vals.append(1.0 if k % 2 == 0 else -1.0)
        k += 1
    return min(vals), max(vals)


def walls_negative_at(p: ChamberPoint, orientation: int = 1) -> list[Wall]:
    """Walls W with c z - a x - b y <= 0 at p, sorted by (c, a, b).

    Only walls with c <= wall_bound(p, p) qualify.  For each such c the
    qualifying (a, b) = R (cos phi, sin phi), R^2 = c^2 + 1, lie within an
    angle psi of the direction of (x, y), where cos psi = c z / (R |(x, y)|).
    The window is located in floating point with a generous margin and every
    candidate is then decided by an exact integer test, so the result is exact
    as long as the margin covers the rounding error.
    """
    X, Y, Z = p.integer_coords()
    bound = wall_bound(p, p)
    if bound == 0:
        return []
    x, y, z = float(p.x), float(p.y), float(p.z)
    rho = math.hypot(x, y)
    theta = math.atan2(y, x)
    out = []
    for c in range(1, bound + 1, 2):
        R = math.sqrt(c * c + 1)
        cos_psi = min(1.0, c * z / (R * rho))
        psi = math.acos(cos_psi)
        lo, hi = _cos_range(theta - psi, theta + psi)
        margin = 3 + 1e-7 * R
        a_lo = max(-c, math.floor(R * lo - margin))
        a_hi = min(c, math.ceil(R * hi + margin))
        if a_lo % 2 == 0:
            a_lo += 1
        n = c * c + 1
        for a in range(a_lo, a_hi + 1, 2):
            b2 = n - a * a
            b = isqrt(b2)
            if b * b != b2 or b == 0:
                continue
            for sb in (-b, b):
                if a * X + sb * Y >= c * Z:
                    out.append(Wall.of(a, sb, c, orientation))
    out.sort(key=lambda w: w.key)
    return out
