class FragmenterError(ValueError):
    """Base class for all input/contract errors raised by the package."""


class EmptyInput(FragmenterError):
    pass


class TooFewParagraphs(FragmenterError):
    pass


class BoundaryOutOfRange(FragmenterError):
    pass


class InvalidInput(FragmenterError):
    pass


class InvalidBoundary(FragmenterError):
    pass


class InstanceTooLarge(FragmenterError):
    pass
