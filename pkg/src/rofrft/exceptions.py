"""Error and warning types raised across the package."""


class ROFrFTError(ValueError):
    """Base class for all package errors."""


class SingularAngle(ROFrFTError):
    """The rotation angle has sin(phi) == 0, where cot and csc diverge."""


class InvalidGrid(ROFrFTError):
    pass


class FamilySingularAngle(ROFrFTError):
    """A closed form is singular at this angle (the image is a distribution)."""


class NotPointEvaluable(ROFrFTError):
    pass


class MissingDerivative(ROFrFTError):
    pass


class MissingParameter(ROFrFTError):
    pass


class GridMismatch(ROFrFTError):
    pass


class AngleMismatch(ROFrFTError):
    pass


class GridTooCoarse(UserWarning):
    """The chirped bandwidth of a signal exceeds the sampling Nyquist rate."""


class TruncationWarning(UserWarning):
    """Signal (or spectrum) is not negligible at the edges of its grid."""


class SupportOverflow(UserWarning):
    """A convolution result does not fit inside the sampling grid."""
