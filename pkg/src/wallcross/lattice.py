"""Integer arithmetic on the cohomology lattice of CP^2 # 2 (-CP^2).

Classes are written in the basis (e1, e2, s) where e1, e2 are the exceptional
classes (square -1) and s is the hyperplane class (square +1), so the
intersection form is diag(-1, -1, +1).  Everything here is exact: Python ints
only, no fixed-width arithmetic.

Isometries are the cohomology actions of reflection diffeomorphisms.  A word
``[w1, w2, ..., wn]`` denotes "reflect in w1 first, then w2, ...", so its
matrix is ``R(wn) @ ... @ R(w1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotMinusOneClass, W2NotPreserved

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

FORM = ((-1, 0, 0), (0, -1, 0), (0, 0, 1))


@dataclass(frozen=True, slots=True)
class LatticeClass:
    """The class a*e1 + b*e2 + c*s."""

    a: int
    b: int
    c: int

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    def __add__(self, other: LatticeClass) -> LatticeClass:
        return LatticeClass(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: LatticeClass) -> LatticeClass:
        return LatticeClass(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> LatticeClass:
        return LatticeClass(-self.a, -self.b, -self.c)

    def __mul__(self, k: int) -> LatticeClass:
        return LatticeClass(k * self.a, k * self.b, k * self.c)

    __rmul__ = __mul__

    def square(self) -> int:
        return pairing(self, self)

    def to_json(self) -> list[int]:
        return [self.a, self.b, self.c]

    @classmethod
    def from_json(cls, triple: Sequence[int]) -> LatticeClass:
        a, b, c = (int(t) for t in triple)
        return cls(a, b, c)

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


E1 = LatticeClass(1, 0, 0)
E2 = LatticeClass(0, 1, 0)
S = LatticeClass(0, 0, 1)
BASIS = (E1, E2, S)

# the two (-1)-spheres S +/- E1 + E2
SIGMA_PLUS = LatticeClass(1, 1, 1)
SIGMA_MINUS = LatticeClass(-1, 1, 1)

# c1 of L(1,1,1), the integral lift of w2 on the N side
W2_LIFT = LatticeClass(1, 1, 1)


def pairing(x: LatticeClass, y: LatticeClass) -> int:
    return x.c * y.c - x.a * y.a - x.b * y.b


def _require_minus_one(sigma: LatticeClass) -> None:
    sq = pairing(sigma, sigma)
    if sq != -1:
        raise NotMinusOneClass(f"class {sigma} has square {sq}, expected -1")


def reflect(sigma: LatticeClass, x: LatticeClass) -> LatticeClass:
    """Reflection in a (-1)-class: x -> x + 2 (x . sigma) sigma."""
    _require_minus_one(sigma)
    return x + sigma * (2 * pairing(x, sigma))


class CoefficientRing(str, enum.Enum):
    Z = "Z"
    Z2 = "Z2"

    def __str__(self):
        return self.value

    def join(self, other: CoefficientRing) -> CoefficientRing:
        """Common ring of two values: Z2 as soon as either side is Z2."""
        if CoefficientRing.Z2 in (self, other):
            return CoefficientRing.Z2
        return CoefficientRing.Z


def _matmul(m: Matrix, n: Matrix) -> Matrix:
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _transpose(m: Matrix) -> Matrix:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


def determinant(m: Matrix) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True, slots=True)
class Isometry:
    """An integer isometry of the lattice together with the reflection word
    it was built from (empty for the identity or a bare matrix)."""

    matrix: Matrix = IDENTITY
    word: tuple[LatticeClass, ...] = field(default=())

    def __call__(self, x: LatticeClass) -> LatticeClass:
        m = self.matrix
        return LatticeClass(*(m[i][0] * x.a + m[i][1] * x.b + m[i][2] * x.c for i in range(3)))

    def act(self, v):
        """Apply the matrix to any coordinate triple (ints or Fractions)."""
        m = self.matrix
        return tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))

    def __matmul__(self, other: Isometry) -> Isometry:
        # (self @ other) applies other first
        return Isometry(_matmul(self.matrix, other.matrix), other.word + self.word)

    def then(self, other: Isometry) -> Isometry:
        """The isometry "self, followed by other"."""
        return other @ self

    def inverse(self) -> Isometry:
        # M^-1 = Q M^T Q for any Q-isometry
        inv = _matmul(_matmul(FORM, _transpose(self.matrix)), FORM)
        return Isometry(inv, tuple(reversed(self.word)))

    def det(self) -> int:
        return determinant(self.matrix)

    def preserves_form(self) -> bool:
        m = self.matrix
        return _matmul(_matmul(_transpose(m), FORM), m) == FORM

    def to_json(self) -> dict:
        return {
            "matrix": [entry for row in self.matrix for entry in row],
            "word": [w.to_json() for w in self.word],
        }

    @classmethod
    def from_json(cls, data: dict) -> Isometry:
        flat = [int(v) for v in data["matrix"]]
        if len(flat) != 9:
            raise ValueError("isometry matrix must have 9 entries")
        matrix = tuple(tuple(flat[3 * i : 3 * i + 3]) for i in range(3))
        word = tuple(LatticeClass.from_json(w) for w in data.get("word", []))
        return cls(matrix, word)


def reflection_matrix(sigma: LatticeClass) -> Isometry:
    _require_minus_one(sigma)
    columns = [tuple(reflect(sigma, e)) for e in BASIS]
    return Isometry(tuple(zip(*columns)), (sigma,))


def compose_word(word: Iterable[LatticeClass]) -> Isometry:
    """Compose reflections; the first entry of ``word`` acts first."""
    result = Isometry()
    for sigma in word:
        result = reflection_matrix(sigma) @ result
    return result


def alpha(m: Isometry) -> int:
    """Spinor norm: +1 iff the forward light cone (hence the orientation of
    H^2_+) is preserved, detected by the sign of (M s) . s."""
    return 1 if pairing(m(S), S) > 0 else -1


def beta(m: Isometry, c: LatticeClass = W2_LIFT) -> int:
    image = m(c)
    diff = image - c
    if any(t % 2 for t in diff):
        raise W2NotPreserved(f"{c} maps to {image}, which differs mod 2")
    half = LatticeClass(diff.a // 2, diff.b // 2, diff.c // 2)
    return -1 if abs(pairing(half, half)) % 2 else 1


def ym_ring(m: Isometry, c: LatticeClass = W2_LIFT) -> CoefficientRing:
    """Z when alpha * beta = +1, otherwise only Z2."""
    return CoefficientRing.Z if alpha(m) * beta(m, c) == 1 else CoefficientRing.Z2


def ym_dimension(p1: int, b_plus: int) -> int:
    """Formal ASD moduli dimension -2 p1 - 3 (1 + b_plus) for b1 = 0."""
    return -2 * p1 - 3 * (1 + b_plus)


@dataclass(frozen=True)
class BundleData:
    p1: int = -1
    w2_lift: LatticeClass = W2_LIFT
    b_plus_N: int = 1

    def __post_init__(self):
        if pairing(self.w2_lift, self.w2_lift) != self.p1:
            raise ValueError(
                f"w2 lift {self.w2_lift} has square {self.w2_lift.square()}, "
                f"but p1 = {self.p1}"
            )

    @property
    def dimension(self) -> int:
        return ym_dimension(self.p1, self.b_plus_N)
