"""Left Groebner bases for annihilators of highest-weight vectors in types A and C."""

from .chevalley import LieAlgebra, bracket, build_lie_algebra
from .fflv import (
    DyckPath,
    enumerate_dyck_paths,
    fflv_points,
    in_polytope,
    minimal_violators,
    path_bound,
)
from .groebner import (
    EnumerationLimitError,
    GroebnerBasis,
    StraighteningError,
    build_groebner_basis,
    is_reduced,
    left_reduce,
    standard_monomials,
    straighten,
    verify_degenerate,
    verify_groebner,
    verify_minimal,
)
from .oracle import ExplicitModule, OracleBudgetError, build_module
from .roots import (
    DominantWeight,
    PositiveRoot,
    RootSystem,
    UnsupportedTypeError,
    good_ordering,
    positive_roots,
    root_leq,
    root_system,
    weyl_dim,
)
from .uea import KERNEL, UEA, Element, compare_monomials, enveloping_algebra

__version__ = "0.1.0"
