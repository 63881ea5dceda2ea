"""Laplace transform on finite semilattices of sets and its two inverse formulas."""

from .errors import (
    BadArguments,
    DegenerateBase,
    IncompleteTable,
    InvalidFamily,
    InvalidGround,
    LaplaceError,
    NotASemicharacter,
    NotInFamily,
    ProblemFormatError,
    ScalarModeError,
    TooLarge,
)
from .ground import GroundSet, SetFamily, Subset, is_semilattice, make_ground, union_closure
from .inversion import FamilyMeasureQuery, invert_measure, invert_point, mobius_fast
from .semicharacter import (
    Semicharacter,
    canonicalize,
    enumerate_semicharacters,
    evaluate,
    support,
)
from .stone import (
    BaseSet,
    PointMeasure,
    StoneModel,
    base_intersect,
    base_members,
    delta,
    f_prime,
    invert_base_measure,
    laplace_of_measure,
    measure_finite_union,
    psi_open,
)
from .transform import (
    TransformTable,
    WeightFn,
    alternating_sum,
    laplace_forward,
    zeta_fast,
    zeta_sparse,
)

__version__ = "0.1.0"
