"""Exception types shared across the toolkit.

Every domain failure raises a subclass of DrawkitError so callers (and the
CLI) can distinguish domain errors from programming mistakes.  Validation
failures double as ValueError for callers that only care about stdlib
semantics.
"""


class DrawkitError(Exception):
    """Base class for all domain errors raised by this package."""


class RangeError(DrawkitError, ValueError):
    """An argument is outside its documented range."""


class DimensionError(DrawkitError, ValueError):
    """Picture dimensions do not line up (join mismatch, empty clip)."""


class NumericError(DrawkitError, ValueError):
    """A coordinate or computed value is NaN or infinite."""


class UnsupportedCharacterError(DrawkitError, ValueError):
    """A character has no glyph in the built-in banner font."""

    def __init__(self, char: str):
        self.char = char
        super().__init__(f"no glyph for character {char!r}")


class WordOverflowError(DrawkitError, ValueError):
    """A single word is wider than the tabulation column width."""

    def __init__(self, word: str, width: int):
        self.word = word
        self.width = width
        super().__init__(f"word {word!r} is longer than column width {width}")


class PlacementError(DrawkitError, ValueError):
    """A random placement can never be accepted (moving circle with r >= R)."""


class CapacityError(DrawkitError, ValueError):
    """A recursion depth would enumerate more items than the configured cap."""


class CorrectnessError(DrawkitError, RuntimeError):
    """A benchmarked algorithm produced a wrong result; the run is aborted."""


class MeasurementError(DrawkitError, RuntimeError):
    """A benchmark runner raised; carries the method and sweep value."""

    def __init__(self, method: str, x: float):
        self.method = method
        self.x = x
        super().__init__(f"runner {method!r} failed at x={x}")
