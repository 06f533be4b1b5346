"""Invariants of D(q,p) non-isolated hypersurface singularities.

The normal form sum x_{ij} y_i y_j + squares has closed-form Milnor
data, Lê numbers, polar multiplicities and Euler obstructions; every
closed form here is paired with an independent computational route
(intersection numbers in products of projective spaces, Newton-polyhedra
membership, exhaustive finite-field counts) and the `verify` machinery
drives the pairs against each other.
"""

from .chow import (
    Bidegree,
    BidegreeSystem,
    TruncatedBivariatePoly,
    intersection_number_fulton,
    intersection_number_ring,
)
from .core import (
    DqpParams,
    FixedCycle,
    LeNumberTable,
    PolarMultiplicityTable,
    euler_obstruction_hypersurface,
    euler_obstruction_sigma1,
    le_numbers,
    milnor_sphere_dimension,
    minimal_params,
    polar_multiplicities_sigma1,
    reduced_euler_characteristic,
    validate_params,
    verify_massey_identity,
)
from .errors import BudgetError, CheckError, DqpError, ValidationError
from .ffcount import (
    NormalFormSpec,
    PointCountReport,
    count_points,
    counting_polynomial,
    eval_normal_form,
    predicted_count,
)
from .integral_closure import (
    Monomial,
    MonomialIdeal,
    WeightVector,
    blowup_fiber_bound,
    default_witnesses,
    in_integral_closure_facets,
    in_integral_closure_newton,
    in_integral_closure_valuative,
    is_reduction,
    power_ideal,
    reduction_generator_count,
)
from .le_engine import (
    LeSystemSpec,
    SymbolicPolynomial,
    build_le_system,
    det_multiplicity,
    generic_symmetric_det,
    le_number_via_chow,
    underlying_multiplicity_via_chow,
)
from .report import Check, Report
from .verify import run_verify

__version__ = "0.1.0"

__all__ = [
    "Bidegree",
    "BidegreeSystem",
    "BudgetError",
    "Check",
    "CheckError",
    "DqpError",
    "DqpParams",
    "FixedCycle",
    "LeNumberTable",
    "LeSystemSpec",
    "Monomial",
    "MonomialIdeal",
    "NormalFormSpec",
    "PointCountReport",
    "PolarMultiplicityTable",
    "Report",
    "SymbolicPolynomial",
    "TruncatedBivariatePoly",
    "ValidationError",
    "WeightVector",
    "blowup_fiber_bound",
    "build_le_system",
    "count_points",
    "counting_polynomial",
    "default_witnesses",
    "det_multiplicity",
    "euler_obstruction_hypersurface",
    "euler_obstruction_sigma1",
    "eval_normal_form",
    "generic_symmetric_det",
    "in_integral_closure_facets",
    "in_integral_closure_newton",
    "in_integral_closure_valuative",
    "intersection_number_fulton",
    "intersection_number_ring",
    "is_reduction",
    "le_number_via_chow",
    "le_numbers",
    "milnor_sphere_dimension",
    "minimal_params",
    "polar_multiplicities_sigma1",
    "power_ideal",
    "predicted_count",
    "reduced_euler_characteristic",
    "reduction_generator_count",
    "run_verify",
    "underlying_multiplicity_via_chow",
    "validate_params",
    "verify_massey_identity",
]
