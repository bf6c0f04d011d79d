from fractions import Fraction

from hypothesis import strategies as st

from wallcross.lattice import SIGMA_MINUS, SIGMA_PLUS, LatticeClass

GENERATORS = (SIGMA_PLUS, SIGMA_MINUS, LatticeClass(1, -1, 1), LatticeClass(-1, -1, 1))

words = st.lists(st.sampled_from(GENERATORS), max_size=4)
small_classes = st.builds(LatticeClass, st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))


def _rational(max_den):
    return st.integers(1, max_den).flatmap(lambda d: st.integers(-d, d).map(lambda n: Fraction(n, d)))


def disk_points(max_den=20, max_radius=Fraction(9, 10)):
    """Rational Poincare disk points, denominators <= max_den, radius <= max_radius."""
    return st.tuples(_rational(max_den), _rational(max_den)).filter(
        lambda p: p[0] ** 2 + p[1] ** 2 <= max_radius**2
    )


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
