import pytest
from hypothesis import given
from hypothesis import strategies as st

from wallcross.errors import InvalidInput, OddBPlus, RohlinViolation
from wallcross.lattice import SIGMA_PLUS, CoefficientRing, alpha, reflection_matrix
from wallcross.swside import (
    SwContext,
    morgan_szabo_parity,
    sw_epsilon_parity,
    sw_reflection_invariant,
    sw_ring,
)


@pytest.mark.parametrize("b_plus, parity", [(4, 1), (2, 0), (8, 1)])
def test_epsilon_parity(b_plus, parity):
    assert sw_epsilon_parity(b_plus) == parity


def test_epsilon_parity_rejects_odd():
    with pytest.raises(OddBPlus):
        sw_epsilon_parity(3)


@pytest.mark.parametrize(
    "alpha_, parity, ring",
    [(1, 1, CoefficientRing.Z2), (1, 0, CoefficientRing.Z), (-1, 1, CoefficientRing.Z), (-1, 0, CoefficientRing.Z2)],
)
def test_sw_ring(alpha_, parity, ring):
    assert sw_ring(alpha_, parity) is ring


def test_sw_ring_rejects_bad_input():
    with pytest.raises(InvalidInput):
        sw_ring(0, 1)


def test_morgan_szabo():
    assert morgan_szabo_parity(3) == 1
    assert morgan_szabo_parity(7) == 0
    with pytest.raises(RohlinViolation):
        morgan_szabo_parity(4)
    with pytest.raises(RohlinViolation):
        morgan_szabo_parity(-1)


@pytest.mark.parametrize("b_plus_X, parity", [(3, 1), (7, 0), (11, 0)])
def test_reflection_invariant(b_plus_X, parity):
    ctx = SwContext(b_plus_X, alpha(reflection_matrix(SIGMA_PLUS)))
    assert ctx.b_plus_Z % 4 == 0
    result = sw_reflection_invariant(ctx)
    assert result.parity == parity == morgan_szabo_parity(b_plus_X)
    assert result.ring is CoefficientRing.Z2
    assert result.to_json() == {"parity": parity, "ring": "Z2", "epsilon_parity": 1}


def test_context_validation():
    with pytest.raises(RohlinViolation):
        SwContext(5)
    with pytest.raises(InvalidInput):
        SwContext(3, alpha=0)


@given(st.integers(1, 10_000))
def test_only_b_plus_three_is_odd(k):
    b = 4 * k + 3
    assert sw_reflection_invariant(SwContext(b)).parity == 0


@given(st.integers(1, 10_000))
def test_z_ring_never_arises(k):
    assert sw_ring(1, sw_epsilon_parity(4 * k)) is CoefficientRing.Z2


@given(st.integers(-100, 100))
def test_constraints_raise_rather_than_coerce(b):
    if b % 4 == 3 and b >= 3:
        assert morgan_szabo_parity(b) in (0, 1)
    else:
        with pytest.raises(RohlinViolation):
            morgan_szabo_parity(b)
