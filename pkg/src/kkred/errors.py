"""Typed failures shared across the package."""


class KkredError(Exception):
    """Base class for all package errors."""


class AlgebraicExtensionRequired(KkredError):
    """A step needs arithmetic in an algebraic extension of Q.

    Raised instead of silently degrading: irrational eigenvalues,
    irrational singular points, and similar.
    """


class ParametricUnsupported(KkredError):
    """Operation restricted to plain rational coefficients got parameters."""


class ParameterDependentExponent(KkredError):
    """An exponent bound (indicial root, pole location) depends on parameters."""


class CyclicVectorNotFound(KkredError):
    """Bounded random search for a cyclic vector failed; signals a bug or
    a degenerate input."""


class ComponentExplosion(KkredError):
    """Case splitting during rank minimization exceeded the configured cap."""


class NoRationalPointFound(KkredError):
    """Bounded search for a rational point on a constraint component failed."""


class NotNilpotent(KkredError):
    """Matrix expected to be nilpotent is not."""


class SingularGauge(KkredError):
    """Gauge matrix is not invertible over the rational function field."""


class NonConvergence(KkredError):
    """Saturation loop exceeded its theoretical bound; signals a bug."""


class BlockStructureError(KkredError):
    """Input matrix violates the declared block-lower-triangular structure."""


class ParseError(KkredError):
    """Malformed rational function or system document.

    Carries a ``position`` attribute (offset in the input string) when the
    failure happened inside an expression.
    """

    def __init__(self, message, position=None):
        super().__init__(message if position is None
                         else f"{message} (at position {position})")
        self.position = position
