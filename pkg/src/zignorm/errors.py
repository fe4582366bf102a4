class ZigzagError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(ZigzagError):
    def __init__(self, message, path=()):
        self.path = tuple(path)
        self.message = message
        where = " / ".join(self.path)
        super().__init__(f"{where}: {message}" if where else message)


class CompositionError(ZigzagError):
    pass


class DimensionMismatchError(ZigzagError, ValueError):
    pass


class AddressError(ZigzagError, IndexError):
    pass


class SignatureError(ZigzagError):
    pass


class GlobularityError(ZigzagError):
    pass


class BudgetExceeded(ZigzagError):
    """A brute-force search was asked to go past its configured limits."""


class ParseError(ZigzagError):
    def __init__(self, message, pointer=""):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")
