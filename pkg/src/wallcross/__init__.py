"""Exact lattice and wall-crossing computations for reflection diffeomorphisms
of X # CP^2 # 2(-CP^2) and their 1-parameter Donaldson invariants."""

from .chambers import (
    ORIGIN,
    ChamberPoint,
    Wall,
    enumerate_walls,
    epsilon,
    klein_coords,
    poincare_to_hyperboloid,
    wall_bound,
    wall_sign,
    walls_disjoint_check,
)
from .crossing import (
    GLUING_MULTIPLICITY,
    Crossing,
    CrossingReport,
    InvariantExpression,
    evaluate,
    image_point,
    invariant_add,
    invariant_negate,
    one_param_invariant,
    segment_crossings_oracle,
    separation_crossings,
)
from .lattice import (
    S,
    SIGMA_MINUS,
    SIGMA_PLUS,
    W2_LIFT,
    BundleData,
    CoefficientRing,
    Isometry,
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
from .swside import (
    SwContext,
    morgan_szabo_parity,
    sw_epsilon_parity,
    sw_reflection_invariant,
    sw_ring,
)

__version__ = "0.1.0"
