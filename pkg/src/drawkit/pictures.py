"""The character-grid picture algebra.

A DiscretePic is an immutable rectangle of characters: every row has the
same length, trailing spaces are real cells, and line breaks exist only in
the rendered text form.  All combinators are pure and preserve
rectangularity, so pictures compose freely (join, frame, scale, overlay,
clip, rotate).

Pyramids keep their third, trailing space segment so that every row is a
palindrome and a half-turn rotation really is the upside-down pyramid.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DimensionError, RangeError

_FORBIDDEN = {"\n", "\r"}


class DiscretePic:
    """Immutable rectangular character grid.

    Rows are stored as strings; a picture with zero rows still remembers
    its width so that degenerate pictures stay lawful join identities.
    """

    __slots__ = ("_rows", "_width")

    def __init__(self, rows: Iterable[str], width: int | None = None):
        rows = tuple(rows)
        if rows:
            w = len(rows[0])
            for i, row in enumerate(rows):
                if not isinstance(row, str):
                    raise TypeError(f"row {i} is not a string")
                if len(row) != w:
                    raise DimensionError(
                        f"row {i} has length {len(row)}, expected {w}"
                    )
                if _FORBIDDEN & set(row):
                    raise DimensionError(f"row {i} contains a line break")
            if width is not None and width != w:
                raise DimensionError(f"width {width} does not match rows ({w})")
            self._width = w
        else:
            if width is not None and width < 0:
                raise RangeError("width must be >= 0")
            self._width = width or 0
        self._rows = rows

    @classmethod
    def blank(cls, height: int, width: int, fill: str = " ") -> "DiscretePic":
        """A height x width picture of one repeated fill character."""
        _check_cell(fill)
        if height < 0 or width < 0:
            raise RangeError("dimensions must be >= 0")
        return cls((fill * width,) * height, width=width)

    @classmethod
    def parse(cls, text: str) -> "DiscretePic":
        """Inverse of render(): split a uniform-width text block on LF."""
        if text == "":
            return cls(())
        if not text.endswith("\n"):
            raise DimensionError("rendered picture must end with a line break")
        return cls(text.split("\n")[:-1])

    @property
    def rows(self) -> tuple[str, ...]:
        return self._rows

    @property
    def height(self) -> int:
        return len(self._rows)

    @property
    def width(self) -> int:
        return self._width

    def render(self) -> str:
        """Text form: every row followed by one LF, including the last."""
        return "".join(row + "\n" for row in self._rows)

    # -- combinators ----------------------------------------------------

    def hjoin(self, other: "DiscretePic") -> "DiscretePic":
        """Place `other` to the right; heights must match."""
        if self.height != other.height:
            raise DimensionError(
                f"hjoin height mismatch: {self.height} vs {other.height}"
            )
        return DiscretePic(
            tuple(a + b for a, b in zip(self._rows, other._rows)),
            width=self._width + other._width,
        )

    def vjoin(self, other: "DiscretePic") -> "DiscretePic":
        """Place `other` below; widths must match."""
        if self.width != other.width:
            raise DimensionError(
                f"vjoin width mismatch: {self.width} vs {other.width}"
            )
        return DiscretePic(self._rows + other._rows, width=self._width)

    def frame(self, border: str = "*") -> "DiscretePic":
        """Surround with a one-cell border of `border`."""
        _check_cell(border)
        top = border * (self._width + 2)
        middle = tuple(border + row + border for row in self._rows)
        return DiscretePic((top,) + middle + (top,))

    def scale(self, kx: int, ky: int) -> "DiscretePic":
        """Replicate each cell kx times across and each row ky times down."""
        if kx < 1 or ky < 1:
            raise RangeError(f"scale factors must be >= 1, got ({kx}, {ky})")
        rows = []
        for row in self._rows:
            wide = "".join(ch * kx for ch in row)
            rows.extend([wide] * ky)
        return DiscretePic(tuple(rows), width=self._width * kx)

    def overlay(
        self,
        top: "DiscretePic",
        at_row: int,
        at_col: int,
        transparent: str = " ",
    ) -> "DiscretePic":
        """Paint `top` over this picture at the given offset.

        Cells of `top` equal to `transparent` let the base show through;
        parts of `top` falling outside the base are discarded.
        """
        _check_cell(transparent)
        rows = list(self._rows)
        for i, trow in enumerate(top.rows):
            r = at_row + i
            if not 0 <= r < self.height:
                continue
            base = list(rows[r])
            for j, ch in enumerate(trow):
                c = at_col + j
                if 0 <= c < self._width and ch != transparent:
                    base[c] = ch
            rows[r] = "".join(base)
        return DiscretePic(tuple(rows), width=self._width)

    def clip(self, row: int, col: int, h: int, w: int) -> "DiscretePic":
        """Extract the intersection of a rectangle with this picture.

        An empty intersection signals a logic bug and raises.
        """
        r0, r1 = max(row, 0), min(row + h, self.height)
        c0, c1 = max(col, 0), min(col + w, self._width)
        if r0 >= r1 or c0 >= c1:
            raise DimensionError(
                f"clip rectangle ({row},{col},{h},{w}) misses the "
                f"{self.height}x{self._width} picture"
            )
        return DiscretePic(tuple(r[c0:c1] for r in self._rows[r0:r1]))

    def rotate180(self) -> "DiscretePic":
        """Half turn: reverse the row order and each row's characters."""
        return DiscretePic(
            tuple(row[::-1] for row in reversed(self._rows)), width=self._width
        )

    def pad_to(self, height: int, width: int, fill: str = " ") -> "DiscretePic":
        """Grow to height x width, anchored top-left, padding with `fill`."""
        _check_cell(fill)
        if height < self.height or width < self._width:
            raise RangeError(
                f"pad_to target {height}x{width} is smaller than "
                f"{self.height}x{self._width}"
            )
        rows = [row + fill * (width - self._width) for row in self._rows]
        rows.extend([fill * width] * (height - self.height))
        return DiscretePic(tuple(rows), width=width)

    # -- dunder plumbing ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DiscretePic):
            return NotImplemented
        return self._rows == other._rows and self._width == other._width

    def __hash__(self):
        return hash((self._rows, self._width))

    def __repr__(self):
        return f"DiscretePic({self.height}x{self._width})"

    def __str__(self):
        return self.render()


def _check_cell(c: str):
    if not isinstance(c, str) or len(c) != 1:
        raise RangeError(f"expected a single character, got {c!r}")
    if c in _FORBIDDEN:
        raise RangeError("line-break characters cannot be picture cells")


def uniform_line(length: int, c: str) -> DiscretePic:
    """One row of `length` copies of `c` (length 0 gives the 1x0 picture)."""
    _check_cell(c)
    if length < 0:
        raise RangeError(f"length must be >= 0, got {length}")
    return DiscretePic((c * length,))


def pyramid_row(h: int, r: int, c: str) -> DiscretePic:
    """Row r of an h-row pyramid: spaces, 2r-1 marks, spaces (a palindrome)."""
    if not 1 <= r <= h:
        raise RangeError(f"row {r} out of range 1..{h}")
    _check_cell(c)
    return DiscretePic((" " * (h - r) + c * (2 * r - 1) + " " * (h - r),))


def pyramid(h: int, c: str) -> DiscretePic:
    """An h-row pyramid of `c`, 2h-1 wide, spaces padding both flanks."""
    if h < 1:
        raise RangeError(f"pyramid height must be >= 1, got {h}")
    pic = pyramid_row(h, 1, c)
    for r in range(2, h + 1):
        pic = pic.vjoin(pyramid_row(h, r, c))
    return pic
