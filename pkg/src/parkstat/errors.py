"""Exception types shared across the package."""


class ParkstatError(Exception):
    pass


class ParseError(ParkstatError, ValueError):
    pass


class InvalidWord(ParkstatError, ValueError):
    pass


class InvalidTree(ParkstatError, ValueError):
    pass


class InvalidPartition(ParkstatError, ValueError):
    pass


class NotParking(ParkstatError, ValueError):
    """Raised when an operation needs a parking function and gets something else."""


class CodeOutOfRange(ParkstatError, ValueError):
    pass


class ParamOutOfRange(ParkstatError, ValueError):
    pass


class SideConditionViolated(ParkstatError, ValueError):
    pass


class ResourceCap(ParkstatError, RuntimeError):
    """Raised when an exhaustive enumeration would exceed the configured size cap."""
