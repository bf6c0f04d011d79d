"""Replay of the reference computations as named fixtures.

Each fixture pairs a frozen expected value with a computation; both sides are
compared as canonical JSON.  Fixture names start with the number of the
acceptance criterion they belong to.  Everything here is deterministic: the
sampled checks use fixed grids rather than random draws.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fnmatch import fnmatch
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterable, Sequence

from ..chambers import (
    ORIGIN,
    ChamberPoint,
    enumerate_walls,
    epsilon,
    poincare_to_hyperboloid,
    walls_disjoint_check,
)
from ..crossing import (
    InvariantExpression,
    evaluate,
    image_point,
    invariant_add,
    invariant_negate,
    one_param_invariant,
    segment_crossings_oracle,
    separation_crossings,
)
from ..errors import NonGenericPoint
from ..lattice import (
    S,
    SIGMA_MINUS,
    SIGMA_PLUS,
    W2_LIFT,
    IDENTITY,
    LatticeClass,
    alpha,
    beta,
    compose_word,
    pairing,
    reflect,
    reflection_matrix,
    ym_dimension,
    ym_ring,
)
from ..swside import SwContext, morgan_szabo_parity, sw_epsilon_parity, sw_reflection_invariant, sw_ring
from .figure import reference_figure_spec, render_figure
from .serialize import emit_json, to_plain

F0_WORD = (SIGMA_MINUS, SIGMA_PLUS)
INVERSE_F0_WORD = (SIGMA_PLUS, SIGMA_MINUS)
GENERATORS = (SIGMA_PLUS, SIGMA_MINUS, LatticeClass(1, -1, 1), LatticeClass(-1, -1, 1))
POINT_B = (Fraction(-1, 2), Fraction(-1, 2))


@dataclass(frozen=True)
class Fixture:
    name: str
    expected: Any
    compute: Callable[[], Any]
    time_limit: float | None = None


@dataclass(frozen=True)
class FixtureResult:
    name: str
    expected: str
    actual: str
    passed: bool
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


def _crossing_summary(report) -> dict:
    return {
        "crossings": [[c.wall.label, c.direction, c.doubled] for c in report.crossings],
        "gamma_dot_W": report.gamma_dot_W,
        "net_doubled": report.doubled_total,
    }


def invariant_fixture(name: str, word, start: ChamberPoint, symbol: str, expected: dict) -> Fixture:
    """Fixture for the 1-parameter invariant of ``word`` started at ``start``."""

    def compute():
        return one_param_invariant(compose_word(word), start, symbol)

    return Fixture(name, expected, compute)


def poincare_grid(denominator: int = 10, max_radius: Fraction = Fraction(9, 10)) -> list[tuple[Fraction, Fraction]]:
    out = []
    for i, j in product(range(-denominator, denominator + 1), repeat=2):
        u, v = Fraction(i, denominator), Fraction(j, denominator)
        if u * u + v * v <= max_radius**2:
            out.append((u, v))
    return out


def words_upto(length: int, generators=GENERATORS) -> list[tuple[LatticeClass, ...]]:
    words = []
    for n in range(length + 1):
        words.extend(product(generators, repeat=n))
    return words


def _start_point_independence() -> dict:
    m = compose_word(F0_WORD)
    values = set()
    for u, v in poincare_grid(denominator=10):
        try:
            values.add(separation_crossings(m, poincare_to_hyperboloid(u, v)).gamma_dot_W)
        except NonGenericPoint:
            continue
    return {"values": sorted(values)}


def _sample_cases(words: Iterable, points: Sequence[ChamberPoint]):
    for word in words:
        m = compose_word(word)
        for p in points:
            try:
                yield word, m, p, separation_crossings(m, p)
            except NonGenericPoint:
                continue


def _oracle_equivalence() -> dict:
    points = [poincare_to_hyperboloid(Fraction(i, 7), Fraction(j, 11)) for i, j in ((1, 2), (-3, 1), (2, -5), (0, 3))]
    mismatches = 0
    checked = 0
    for word, m, p, report in _sample_cases(words_upto(3), points):
        if report.end == p:
            if report.crossings:
                mismatches += 1
            continue
        sep = sorted((c.wall.key, c.direction) for c in report.crossings)
        orc = sorted((w.key, d) for w, _t, d in segment_crossings_oracle(p, report.end))
        mismatches += sep != orc
        checked += 1
    return {"mismatches": mismatches, "checked_nonzero": checked > 0}


def _algebra_laws() -> dict:
    points = [poincare_to_hyperboloid(Fraction(1, 9), Fraction(2, 7)), poincare_to_hyperboloid(Fraction(-2, 5), Fraction(1, 13))]
    words = words_upto(2)
    additivity = antisymmetry = flips = 0
    for w1 in words:
        m1 = compose_word(w1)
        for p in points:
            try:
                r1 = separation_crossings(m1, p)
                flipped = separation_crossings(m1, p, orientation=-1)
                back = separation_crossings(m1.inverse(), r1.end)
            except NonGenericPoint:
                continue
            flips += flipped.gamma_dot_W != -r1.gamma_dot_W
            antisymmetry += back.gamma_dot_W != -r1.gamma_dot_W
            for w2 in words:
                try:
                    r2 = separation_crossings(compose_word(w2), r1.end)
                    total = separation_crossings(compose_word(tuple(w1) + tuple(w2)), p)
                except NonGenericPoint:
                    continue
                additivity += total.gamma_dot_W != r1.gamma_dot_W + r2.gamma_dot_W
    return {"additivity_failures": additivity, "antisymmetry_failures": antisymmetry, "flip_failures": flips}


def _composite() -> InvariantExpression:
    # f1 acts on the lattice exactly as f0 does; only the symbol differs
    f1_invariant = one_param_invariant(compose_word(F0_WORD), ORIGIN, "X1")
    f0_invariant = one_param_invariant(compose_word(F0_WORD), ORIGIN, "X0")
    return invariant_add(f1_invariant, invariant_negate(f0_invariant))


def _f0_report(start):
    return separation_crossings(compose_word(F0_WORD), start)


def default_fixtures() -> list[Fixture]:
    f0 = compose_word(F0_WORD)
    inv = compose_word(INVERSE_F0_WORD)
    pB = poincare_to_hyperboloid(*POINT_B)
    return [
        Fixture("1.pairing-sigma-square", -1, lambda: pairing(SIGMA_PLUS, SIGMA_PLUS)),
        Fixture("1.reflect-sigma-plus-s", [2, 2, 3], lambda: reflect(SIGMA_PLUS, S), time_limit=1e-3),
        Fixture("1.reflect-sigma-minus-s", [-2, 2, 3], lambda: reflect(SIGMA_MINUS, S), time_limit=1e-3),
        Fixture("2.f0-word-image", [1, 5, 5], lambda: f0(W2_LIFT)),
        Fixture("2.reverse-word-image", [1, -3, -3], lambda: inv(W2_LIFT)),
        Fixture("2.words-mutually-inverse", [True, True], lambda: [(f0 @ inv).matrix == IDENTITY, (inv @ f0).matrix == IDENTITY]),
        Fixture(
            "3.figure-origin-crossings",
            {"crossings": [["W(1,1,1)", -1, -2], ["W(1,3,3)", -1, -2]], "gamma_dot_W": -2, "net_doubled": -4},
            lambda: _crossing_summary(_f0_report(ORIGIN)),
            time_limit=1.0,
        ),
        Fixture(
            "3.origin-report-json-gamma",
            -2,
            lambda: to_plain(_f0_report(ORIGIN))["gamma_dot_W"],
        ),
        invariant_fixture("3.D_Z(f0)", F0_WORD, ORIGIN, "X0", {"ring": "Z", "terms": {"X0": -4}}),
        Fixture(
            "4.figure-point-b-crossings",
            {
                "crossings": [
                    ["W(-1,-1,1)", 1, 2],
                    ["W(1,1,1)", -1, -2],
                    ["W(1,3,3)", -1, -2],
                    ["W(7,11,13)", -1, -2],
                ],
                "gamma_dot_W": -2,
                "net_doubled": -4,
            },
            lambda: _crossing_summary(_f0_report(pB)),
            time_limit=1.0,
        ),
        Fixture(
            "4.point-b-crossing-order",
            ["W(-1,-1,1)", "W(1,1,1)", "W(1,3,3)", "W(7,11,13)"],
            lambda: [w.label for w, _t, _d in segment_crossings_oracle(pB, image_point(f0, pB))],
        ),
        Fixture(
            "5.composite-expression",
            {"ring": "Z", "terms": {"X0": 4, "X1": -4}},
            _composite,
        ),
        Fixture("5.negate", {"ring": "Z", "terms": {"X0": 4}}, lambda: invariant_negate(InvariantExpression({"X0": -4}))),
        Fixture("5.equal-invariants-vanish", 0, lambda: evaluate(_composite(), {"X0": 5, "X1": 5})),
        Fixture("5.distinct-invariants-nonzero", -4, lambda: evaluate(_composite(), {"X0": 1, "X1": 2})),
        Fixture("6.start-point-independence", {"values": [-2]}, _start_point_independence, time_limit=30.0),
        Fixture("7.oracle-equivalence", {"mismatches": 0, "checked_nonzero": True}, _oracle_equivalence, time_limit=60.0),
        Fixture(
            "8.algebra-laws",
            {"additivity_failures": 0, "antisymmetry_failures": 0, "flip_failures": 0},
            _algebra_laws,
        ),
        Fixture("9.walls-up-to-3", 12, lambda: len(enumerate_walls(3))),
        Fixture("9.walls-disjoint-15", True, lambda: walls_disjoint_check(15)),
        Fixture(
            "9.epsilon-signs",
            [1, 1, 1, 1],
            lambda: [epsilon(1, 1, 1), epsilon(1, 3, 3), epsilon(-1, -1, 1), epsilon(7, 11, 13)],
        ),
        Fixture("9.figure-shows-W(7,11,13)", True, lambda: 'data-wall="W(7,11,13)"' in render_figure(reference_figure_spec(13))),
        Fixture("10.single-reflection-alpha", 1, lambda: alpha(reflection_matrix(SIGMA_PLUS))),
        Fixture(
            "10.single-reflection-ring",
            {"alpha_beta": -1, "ring": "Z2"},
            lambda: {
                "alpha_beta": alpha(reflection_matrix(SIGMA_PLUS)) * beta(reflection_matrix(SIGMA_PLUS)),
                "ring": ym_ring(reflection_matrix(SIGMA_PLUS)),
            },
        ),
        Fixture("10.f0-ring", {"alpha_beta": 1, "ring": "Z"}, lambda: {"alpha_beta": alpha(f0) * beta(f0), "ring": ym_ring(f0)}),
        Fixture("10.sw-epsilon-parity", 1, lambda: sw_epsilon_parity(4)),
        Fixture("10.sw-ring", "Z2", lambda: sw_ring(alpha(reflection_matrix(SIGMA_PLUS)), sw_epsilon_parity(4))),
        Fixture("11.ym-dimension", -4, lambda: ym_dimension(-1, 1)),
        Fixture("11.morgan-szabo-3", 1, lambda: morgan_szabo_parity(3)),
        Fixture("11.morgan-szabo-7", 0, lambda: morgan_szabo_parity(7)),
        Fixture(
            "11.sw-invariant-3",
            {"epsilon_parity": 1, "parity": 1, "ring": "Z2"},
            lambda: sw_reflection_invariant(SwContext(3)),
        ),
        Fixture(
            "11.sw-invariant-7",
            {"epsilon_parity": 1, "parity": 0, "ring": "Z2"},
            lambda: sw_reflection_invariant(SwContext(7)),
        ),
    ]


def run_verify(only: str | None = None, fixtures: Sequence[Fixture] | None = None) -> list[FixtureResult]:
    """Run fixtures (optionally those whose name matches the glob ``only``)."""
    if fixtures is None:
        fixtures = default_fixtures()
    results = []
    for fx in fixtures:
        if only is not None and not (fx.name == only or fnmatch(fx.name, only)):
            continue
        expected = emit_json(fx.expected)
        start = time.perf_counter()
        try:
            actual = emit_json(fx.compute())
        except Exception as exc:  # failures are reported, not raised
            actual = emit_json({"error": f"{type(exc).__name__}: {exc}"})
        elapsed = time.perf_counter() - start
        passed = actual == expected and (fx.time_limit is None or elapsed < fx.time_limit)
        results.append(FixtureResult(fx.name, expected, actual, passed, elapsed))
    return results
