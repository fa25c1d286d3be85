"""Exception types shared across the package."""


class O2EndoError(Exception):
    """Base class for all package errors."""


class WordError(O2EndoError):
    """Malformed word over the two-letter alphabet."""


class NonZeroGaugeDegree(O2EndoError):
    """Element is not gauge-invariant, so it has no matrix picture."""


class LevelTooSmall(O2EndoError):
    """Requested matrix level cannot hold all words of the element."""


class BadLevels(O2EndoError):
    """Partial trace target level exceeds the source level."""


class NotUnitary(O2EndoError):
    """Element fails u*u = uu* = 1, required for inner conjugation."""


class NotDiagonal(O2EndoError):
    """Element is not a projection in the diagonal subalgebra."""


class RankUnsupported(O2EndoError):
    """Index-space iteration is only defined for rank-two unitaries."""


class NoStabilization(O2EndoError):
    """Decreasing subspace chain failed to stabilize within the cap."""


class IndexOutOfRange(O2EndoError):
    """Computed index dimension is outside the admissible set {1, 2, 4}."""


class ConsistencyViolation(O2EndoError):
    """Two independent computations of the same invariant disagree."""


class InconclusiveError(O2EndoError):
    """Bounded search exhausted without a definite answer."""


class UnknownFormat(O2EndoError):
    """Report format name not recognized."""
