"""Exception hierarchy shared by all modules."""


class VerschiebungError(Exception):
    """Base class for every error raised by the package."""


class UnsupportedCharacteristic(VerschiebungError):
    pass


class UnluckySpecialization(VerschiebungError):
    """A specialization hit a denominator or a degenerate locus."""


class SearchExhausted(VerschiebungError):
    pass


class NotDivisible(VerschiebungError):
    pass


class NotASquare(VerschiebungError):
    pass


class ExtensionNeeded(NotASquare):
    """The leading coefficient has no square root in the coefficient field."""


class GenericityError(VerschiebungError):
    pass


class DegenerateTheta(VerschiebungError):
    pass


class DegenerateCurve(VerschiebungError):
    pass


class ReconstructionFailure(VerschiebungError):
    pass


class InternalInconsistency(VerschiebungError):
    """Two independent computations of the same object disagree."""


class FormatError(VerschiebungError):
    pass
