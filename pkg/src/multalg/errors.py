"""Exception types shared across the toolkit."""


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class NotFiniteError(ValueError):
    """The quotient by the ideal is not finite-dimensional."""


class NotVeryStableError(ValueError):
    """The relation quadrics have a common nonzero solution (base point)."""


class SocleNotOneDimensionalError(ValueError):
    """Top graded piece is not one-dimensional; no canonical duality pairing."""


class DegenerateInputError(ValueError):
    """Input data violates a distinctness/nondegeneracy precondition."""


class DegenerateParametersError(ValueError):
    """Parameters lie on an excluded locus (e.g. a**2 == b**2)."""


class ExtensionRequiredError(ValueError):
    """Point coordinates need a quadratic extension that was not declared."""


class SingularCurveError(ValueError):
    """Operation requires a smooth curve."""


class CalibrationError(RuntimeError):
    """No consistent normalization constants exist for the invariant formulas."""


class GroebnerTimeoutError(RuntimeError):
    """Basis computation exceeded the caller's time budget."""
