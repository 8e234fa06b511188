"""Exception types raised by the fishburn library."""


class FishburnError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FishburnError, ValueError):
    """Malformed textual input, located by byte offset."""

    def __init__(self, message: str, offset: int = 0):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class MarkingError(FishburnError, ValueError):
    """A marking that names no feature of its host, or lies outside a bijection's image."""


class DegreeMismatchError(FishburnError, ValueError):
    """Series operands truncated at different x-degrees."""


class PosetError(FishburnError, ValueError):
    """A relation that is not a strict partial order, or an out-of-range element."""


class InvolutionError(FishburnError):
    """The residual pairing of the involution could not be built."""


class ConfigError(FishburnError, ValueError):
    """Invalid environment configuration."""
