"""Exception hierarchy shared by all spherilink modules."""


class SpherilinkError(Exception):
    """Base class for all spherilink errors."""


class OutOfRange(SpherilinkError, ValueError):
    """A sector angle lies outside the open interval (0, pi)."""


class QuadrilateralInequality(SpherilinkError, ValueError):
    """One of the four spherical quadrilateral inequalities fails.

    The ``inequality`` attribute names the violated line.
    """

    def __init__(self, inequality: str):
        self.inequality = inequality
        super().__init__(f"quadrilateral inequality violated: {inequality}")


class NotElliptic(SpherilinkError, ValueError):
    """Operation requires a non-degenerate (elliptic) vertex type."""


class NearDegenerate(SpherilinkError, ValueError):
    """Elliptic parametrization refused: too close to a degenerate type."""


class ModulusOutOfRange(SpherilinkError, ValueError):
    """Elliptic modulus must lie in [0, 1)."""


class DomainError(SpherilinkError, ValueError):
    """Function argument outside its mathematical domain."""


class OutOfDomain(SpherilinkError, ValueError):
    """Branch parameter outside the branch's parameter domain."""


class PoleProximity(SpherilinkError, ArithmeticError):
    """Evaluation point within the exclusion zone of a pole."""


class TypeMismatch(SpherilinkError, ValueError):
    """Operation not defined for this vertex type."""


class DegenerateState(SpherilinkError, ValueError):
    """A fold coordinate is 0 or infinity where a sign is required."""


class ChartSingular(SpherilinkError, ArithmeticError):
    """No embedding chart is valid for the requested configuration."""


class ComplexResidue(SpherilinkError, ArithmeticError):
    """A nominally real quantity came out with a large imaginary part."""


class SchemaError(SpherilinkError, ValueError):
    """A serialized document does not match the expected schema."""
