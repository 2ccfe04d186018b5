"""Exception hierarchy for the Lie GCS engine."""


class LieGcsError(Exception):
    """Base class for every error raised by the engine."""


class DimensionError(LieGcsError, ValueError):
    """Operands have incompatible shapes."""


class DomainError(LieGcsError, ValueError):
    """A name or parameter binding lies outside its declared domain."""


class NotAutomorphismError(LieGcsError):
    """A matrix does not preserve the Lie bracket."""


class NotCocycleError(LieGcsError):
    """A skew map fails the 2-cocycle identity."""


class TransportError(LieGcsError):
    """A passage matrix is not an isomorphism, or the transported structure
    is not integrable on the target algebra."""


class SpinorError(LieGcsError):
    """Preconditions of the type-1 pure spinor construction do not hold."""


class ConsistencyError(LieGcsError):
    """Two independent computations of the same quantity disagree."""


class FixtureError(LieGcsError):
    """The fixture corpus or an input file could not be parsed or validated."""
