"""Exception hierarchy shared by all modules."""


class KMDecompError(Exception):
    """Base class for every error raised by kmdecomp."""


class ZeroPolynomialError(KMDecompError, ValueError):
    pass


class DimensionMismatchError(KMDecompError, ValueError):
    pass


class RingMismatchError(KMDecompError, ValueError):
    pass


class ModelMismatchError(KMDecompError, ValueError):
    pass


class BadIndicesError(KMDecompError, ValueError):
    pass


class NotInGroupError(KMDecompError, ValueError):
    """Matrix does not have determinant one."""


class InexactDivisionError(KMDecompError, ArithmeticError):
    pass


class TagUnavailableInModelError(KMDecompError, ValueError):
    pass


class NotInTorusError(KMDecompError, ValueError):
    pass


class OutsideBigCellError(KMDecompError, ValueError):
    """Elimination hit a pivot that is not a unit of the ring.

    ``index`` is the 1-based diagonal position of the offending pivot.
    """

    def __init__(self, index, pivot=None):
        super().__init__(f"pivot {index} is not a unit: {pivot}")
        self.index = index
        self.pivot = pivot


class ConvergenceFailureError(KMDecompError, RuntimeError):
    pass


class InternalError(KMDecompError, RuntimeError):
    pass


class BadDimensionError(KMDecompError, ValueError):
    pass


class NotSymmetricError(KMDecompError, ValueError):
    """Input is not theta-symmetric (theta(v) != v^-1)."""


class NotInTauGError(KMDecompError, ValueError):
    pass


class BadIndexError(KMDecompError, IndexError):
    pass


class NotSymmetrizableError(KMDecompError, ValueError):
    pass


class PreconditionFailedError(KMDecompError, ValueError):
    pass
