"""Exception hierarchy shared by all modules.

Every error carries an optional ``field`` naming the offending input, which the
command-line front end uses in its diagnostics.
"""


class WorkbenchError(Exception):
    field: str | None = None

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        if field is not None:
            self.field = field


class BadInput(WorkbenchError):
    pass


class ResourceLimit(WorkbenchError):
    """Raised when a computation would exceed a documented size cap."""


class EmptySequence(BadInput):
    field = "dims"


class NegativeDimension(BadInput):
    field = "dims"


class SearchSpaceTooLarge(ResourceLimit):
    pass


class NonpositiveG(BadInput):
    field = "g"


class GTooLarge(ResourceLimit):
    field = "g"


class NotPrime(BadInput):
    field = "p"


class SmallCharacteristic(BadInput):
    field = "p"


class SingularCurve(BadInput):
    field = "a,b"


class FieldTooLarge(ResourceLimit):
    field = "p"


class MixedCharacteristic(BadInput):
    field = "p"


class EmptyList(BadInput):
    field = "curves"


class RingMismatch(BadInput):
    field = "ring"
