"""Capacities, t-normed integrals and axiom checks on finite point spaces."""

from ._common import TOL, InputError, PreconditionError, value_grid
from .capacity import (
    Capacity,
    characteristic,
    enumerate_capacities,
    random_capacity,
    upper_level_set,
    validate,
)
from .characterize import (
    in_upsilon,
    reconstruct_capacity,
    verify_characterization,
    verify_sugeno_simplification,
)
from .comonotone import (
    is_comonotone,
    level_raise,
    monotone_chain,
    random_comonotone_pair,
    squeeze_witness,
)
from .extension import (
    GenSubspace,
    SubspaceElement,
    counterexample_functional,
    element_to_fnvec,
    eval_subspace_functional,
    extend_one_step,
    well_definedness_check,
)
from .functional import check_axioms, lemma_mon_demo
from .integral import Functional, integral_functional, tnormed_integral, tnormed_integral_grid
from .tnorm import LUKASIEWICZ, MINIMUM, PRODUCT, TNorm, apply, check_tnorm_axioms, get_tnorm

__version__ = "0.1.0"
