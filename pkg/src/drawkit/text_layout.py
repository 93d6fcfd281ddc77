"""Word extraction, greedy line filling, and multi-column tabulation.

The tabulation algorithm fills lines first-fit (a word joins the current
line while line + space + word still fits the column width), then deals
the committed lines into columns of a fixed height: line k lands in output
row k mod h, so each column reads top to bottom in committed order.  Every
committed line is padded to width + gap before concatenation.
"""

import re
from dataclasses import dataclass

from .errors import RangeError, WordOverflowError

_WHITESPACE = re.compile(r"[ \t\n]+")  # exactly space, tab, line feed
_ASCII_UPPER = str.maketrans(
    "abcdefghijklmnopqrstuvwxyz", "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
)


@dataclass(frozen=True)
class TextBlock:
    """Immutable text content; layout operations return new blocks."""

    content: str


@dataclass(frozen=True)
class TabulationParams:
    """Column width and height in characters/lines, plus the inter-column gap."""

    width: int
    height: int
    gap: int = 2

    def __post_init__(self):
        if self.width < 1:
            raise RangeError(f"column width must be >= 1, got {self.width}")
        if self.height < 1:
            raise RangeError(f"column height must be >= 1, got {self.height}")
        if self.gap < 0:
            raise RangeError(f"gap must be >= 0, got {self.gap}")


def split_words(block: TextBlock) -> list[str]:
    """Maximal runs of non-whitespace characters, in order."""
    return [w for w in _WHITESPACE.split(block.content) if w]


def fill_line(line: str, width: int) -> str:
    """Pad with trailing spaces up to `width`; longer lines pass through."""
    if len(line) < width:
        return line + " " * (width - len(line))
    return line


def tabulate(block: TextBlock, params: TabulationParams, force: bool = False) -> str:
    """Lay the block's words out in columns; see the module docstring.

    A single word wider than the column raises unless `force`, which
    reproduces the permissive behaviour of emitting an over-wide line.
    Empty rows are omitted; each remaining row ends with one LF.
    """
    words = split_words(block)
    if not words:
        return ""
    w, h, gap = params.width, params.height, params.gap
    if not force:
        for word in words:
            if len(word) > w:
                raise WordOverflowError(word, w)

    rows = [""] * h
    line: str | None = None
    count = 0
    for word in words:
        if line is None:
            line = word
        elif len(line) + 1 + len(word) <= w:
            line += " " + word
        else:
            if count == h:
                count = 0
            rows[count] += fill_line(line, w + gap)
            line = word
            count += 1
    if count == h:
        count = 0
    rows[count] += fill_line(line, w + gap)

    return "".join(row + "\n" for row in rows if row != "")


def uppercase(block: TextBlock) -> TextBlock:
    """Map a-z to A-Z, leaving every other character intact."""
    return TextBlock(block.content.translate(_ASCII_UPPER))


def center(block: TextBlock, width: int) -> TextBlock:
    """Centre every line in `width` columns; the extra space goes right."""
    return TextBlock("\n".join(_center_line(s, width) for s in _lines(block, width)))


def right_justify(block: TextBlock, width: int) -> TextBlock:
    """Right-align every line in `width` columns with leading spaces."""
    return TextBlock(
        "\n".join(" " * (width - len(s)) + s for s in _lines(block, width))
    )


def _lines(block: TextBlock, width: int) -> list[str]:
    lines = block.content.split("\n")
    longest = max(len(s) for s in lines)
    if width < longest:
        raise RangeError(f"width {width} is smaller than the longest line ({longest})")
    return lines


def _center_line(s: str, width: int) -> str:
    left = (width - len(s)) // 2
    return " " * left + s + " " * (width - len(s) - left)
