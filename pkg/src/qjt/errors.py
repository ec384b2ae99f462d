"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Input text does not describe a valid graph."""


class MalformedLineError(GraphParseError):
    """A line could not be tokenized as expected."""


class SelfLoopError(GraphParseError):
    """An edge joins a vertex to itself."""


class IndexOutOfRangeError(GraphParseError):
    """A vertex index falls outside the declared range."""


class EmptyInputError(GraphParseError):
    """The input stream carries no usable content."""


class UnsupportedHeaderError(GraphParseError):
    """Matrix Market header is not coordinate / pattern / symmetric."""


class NonSquareError(GraphParseError):
    """Matrix Market size line declares a non-square matrix."""


class MissingMagicError(GraphParseError):
    """Mesh input does not start with the OFF keyword."""


class FaceArityError(GraphParseError):
    """A mesh face lists fewer than three vertices."""


class TruncatedFileError(GraphParseError):
    """Input ended before the declared element counts were satisfied."""


class EmptyGraphError(ValueError):
    """Graph has no edges, so its volume is zero and no density matrix exists."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class InvalidWeightsError(ValueError):
    """Weight vector is not a valid probability vector."""


class InvalidAlphaError(ValueError):
    """Entropic index must be positive."""


class NonPositiveArgumentError(ValueError):
    """The deformed logarithm requires a strictly positive argument."""


class ConvergenceError(RuntimeError):
    """Eigensolver failed to converge."""
