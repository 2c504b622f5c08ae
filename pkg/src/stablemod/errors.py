"""Exception taxonomy shared across the package."""


class StablemodError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeModulusError(StablemodError):
    """The requested field modulus is not a prime in [2, 2**31 - 1]."""


class CyclicQuiverError(StablemodError):
    """The quiver has a directed cycle, so its path algebra is not finite-dimensional."""


class AlgebraMismatchError(StablemodError):
    """Two objects that must live over the same algebra do not."""


class EndpointMismatchError(StablemodError):
    """Two morphisms that must share source and target do not."""


class PreconditionError(StablemodError):
    """An operation was called outside its stated preconditions."""


class TooLargeError(StablemodError):
    """A brute-force oracle was asked to enumerate beyond its hard size cap."""


class UnknownCheckIdError(StablemodError):
    """A verification suite was asked for a check id that is not registered."""


class InternalInconsistencyError(StablemodError):
    """Two independent computation routes that must agree did not.

    This always signals a bug in the package, never bad user input.
    """


class NonCommutingMorphismError(StablemodError):
    """Vertex maps that fail the commuting-square condition for some arrow."""


class DocumentError(StablemodError):
    """A document failed validation; ``location`` points at the offending field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class DocumentSyntaxError(DocumentError):
    """Malformed document text (with line/column from the JSON parser)."""


class ShapeError(DocumentError):
    """A matrix in a document does not match the shape its dims demand."""
