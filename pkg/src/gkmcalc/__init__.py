"""
gkmcalc: equivariant cohomology of Hamiltonian torus actions, exactly.

Given the fixed points of a torus action and the components of the fixed
sets of codimension-one subtori (two-spheres and four-dimensional pieces,
with their isotropy weights), the image of restriction to the fixed points
is computed degree by degree as the solution space of exact rational linear
equations: congruences modulo each component's direction, and integrality
of the localization sum over each four-dimensional component.
"""

from .cohomology import (
    CohomologyClass,
    GradedBasis,
    HilbertData,
    MembershipReport,
    Residue,
    betti_from_series,
    check_class,
    coordinates,
    hilbert,
    is_member,
    localization_residue,
    multiply_classes,
    nullity,
    solve_degree,
)
from .constraints import (
    CoefficientLayout,
    ConstraintSystem,
    adapted_change_of_variables,
    abbv_rows,
    congruence_rows,
    constraint_matrix,
    export_matrix,
)
from .errors import (
    ClassError,
    CongruenceError,
    GkmError,
    InconsistencyError,
    ParseError,
    ValidationError,
)
from .exactalg import LinearForm, Polynomial, RationalMatrix, parse_polynomial
from .model import (
    FourStratum,
    GkmSpace,
    TorusContext,
    TwoSphereStratum,
    ValidationReport,
    load,
    parse,
    serialize,
    validate,
)

__version__ = "0.1.0"
