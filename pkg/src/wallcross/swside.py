"""Mod 2 Seiberg-Witten bookkeeping for a single reflection f = f^{Sigma+}.

Only the combinatorial shadow is modelled: the coefficient ring from the
parity of epsilon and the spinor norm, Rohlin's constraint on b+(X), and the
Morgan-Szabo parity, which the invariant of f agrees with mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput, OddBPlus, RohlinViolation
from .lattice import CoefficientRing


def sw_epsilon_parity(b_plus: int) -> int:
    """Parity of epsilon = b+/2 + 1 (b1 = 0, moduli dimension -1)."""
    if b_plus % 2:
        raise OddBPlus(f"b+ = {b_plus} must be even")
    return (b_plus // 2 + 1) % 2


def sw_ring(alpha: int, eps_parity: int) -> CoefficientRing:
    if alpha not in (1, -1) or eps_parity not in (0, 1):
        raise InvalidInput("alpha must be +/-1 and eps_parity 0 or 1")
    sign = -alpha if eps_parity else alpha
    return CoefficientRing.Z if sign == 1 else CoefficientRing.Z2


def _check_rohlin(b_plus_X: int) -> None:
    if b_plus_X % 4 != 3:
        raise RohlinViolation(f"b+(X) = {b_plus_X} is not 3 mod 4")
    if b_plus_X < 3:
        raise RohlinViolation(f"b+(X) = {b_plus_X} must be at least 3")


def morgan_szabo_parity(b_plus_X: int) -> int:
    _check_rohlin(b_plus_X)
    return 1 if b_plus_X == 3 else 0


@dataclass(frozen=True)
class SwContext:
    b_plus_X: int
    alpha: int = 1

    def __post_init__(self):
        _check_rohlin(self.b_plus_X)
        if self.alpha not in (1, -1):
            raise InvalidInput("alpha must be +1 or -1")

    @property
    def b_plus_Z(self) -> int:
        return self.b_plus_X + 1


@dataclass(frozen=True)
class SwResult:
    parity: int
    ring: CoefficientRing
    epsilon_parity: int

    def to_json(self) -> dict:
        return {"parity": self.parity, "ring": self.ring.value, "epsilon_parity": self.epsilon_parity}


def sw_reflection_invariant(ctx: SwContext) -> SwResult:
    eps_parity = sw_epsilon_parity(ctx.b_plus_Z)
    return SwResult(
        parity=morgan_szabo_parity(ctx.b_plus_X),
        ring=sw_ring(ctx.alpha, eps_parity),
        epsilon_parity=eps_parity,
    )
