"""Exception types raised across the package."""


class HitcalcError(ValueError):
    pass


class DegreeMismatch(HitcalcError):
    pass


class DimensionMismatch(HitcalcError):
    pass


class MalformedImage(HitcalcError):
    pass


class NonHomogeneous(HitcalcError):
    pass


class DegreeWeightMismatch(HitcalcError):
    pass


class MuTooLarge(HitcalcError):
    pass


class ModeViolation(HitcalcError):
    pass


class IndexOutOfRange(HitcalcError):
    pass


class TooLarge(HitcalcError):
    """A computation guard was exceeded."""
