"""Exact-arithmetic toolkit for multiplicity algebras of nets of quadrics.

Builds graded Artinian quotients from families of quadratic forms attached
to rank-2 bundle data on genus-2 and genus-3 curves, and verifies their
structure: dimensions, duality pairings, discriminant hypersurfaces and
their factorizations, and the node geometry of the associated quartic
symmetroid.  All arithmetic is exact (arbitrary-precision rationals).
"""

from .errors import (
    CalibrationError,
    DegenerateInputError,
    DegenerateParametersError,
    ExtensionRequiredError,
    GroebnerTimeoutError,
    NotDivisibleError,
    NotFiniteError,
    NotVeryStableError,
    RingMismatchError,
    SingularCurveError,
    SocleNotOneDimensionalError,
)
from .exactpoly import (
    MPoly,
    PolyMatrix,
    RING_M,
    det,
    exact_divide,
    linearize_quadratics,
    parse_poly,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    hilbert_vector,
    is_zero_dimensional,
    normal_form,
    standard_monomials,
)

__version__ = "0.1.0"
