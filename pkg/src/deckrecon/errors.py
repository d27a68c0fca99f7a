"""Exception types raised across the package."""


class PartitionError(ValueError):
    """Base class for invalid partition input or operations."""


class IncreasingPartsError(PartitionError):
    pass


class NegativePartError(PartitionError):
    pass


class WeightOverflowError(PartitionError):
    pass


class NotContainedError(PartitionError):
    pass


class NotAnInnerCornerError(PartitionError):
    pass


class NotAddableError(PartitionError):
    pass


class KTooLargeError(PartitionError):
    pass


class TargetTooSmallError(PartitionError):
    pass


class DeckError(ValueError):
    """Malformed deck input."""


class EmptyDeckError(DeckError):
    pass


class MixedWeightsError(DeckError):
    pass


class ParseError(ValueError):
    pass


class ReconstructionError(Exception):
    """The deck could not be turned into a unique partition."""


class BoundNotMetError(ReconstructionError):
    pass


class InconsistentDeckError(ReconstructionError):
    pass


class AmbiguousDeckError(ReconstructionError):
    pass
