"""Weierstrass semigroups at totally ramified places of linearized function fields."""

from .model import (
    D0,
    QI,
    RJK,
    Divisor,
    FieldSpec,
    PolyP,
    PolyQ,
    WitnessExpr,
    YMinusBeta,
    build_spec,
    divisor_of_witness,
    genus,
    principal_divisor,
    restriction,
)
from .multi_place import (
    GammaSet,
    GammaTuple,
    closure_membership,
    gamma,
    gamma_oracle,
    gamma_witness,
    lub,
    tilde_gamma,
)
from .riemann_roch import gap_set_oracle, is_gap, membership_multi, rr_basis, rr_dimension
from .single_place import (
    frobenius,
    gap_set,
    is_symmetric,
    multiplicity,
    same_semigroup_criterion,
    semigroup_generators,
    semigroup_profile,
)

__version__ = "0.1.0"
