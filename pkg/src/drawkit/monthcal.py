"""Calendar month pictures: a banner title over a Mon-Sun day grid.

Weekdays come from Zeller's congruence, so rendering needs no system
clock and no locale; Gregorian years from 1583 on are supported.
"""

from dataclasses import dataclass

from .errors import RangeError
from .glyphs import banner
from .pictures import DiscretePic

MONTH_NAMES = (
    "JANUARY", "FEBRUARY", "MARCH", "APRIL", "MAY", "JUNE",
    "JULY", "AUGUST", "SEPTEMBER", "OCTOBER", "NOVEMBER", "DECEMBER",
)
DAY_HEADER = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")

_MONTH_DAYS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
_CELL = 3  # day numbers are right-aligned in 3-character cells


@dataclass(frozen=True)
class CalendricSpec:
    """A Gregorian month: year >= 1583, month 1..12."""

    year: int
    month: int

    def __post_init__(self):
        if self.year < 1583:
            raise RangeError(f"year must be >= 1583, got {self.year}")
        if not 1 <= self.month <= 12:
            raise RangeError(f"month must be in 1..12, got {self.month}")


def is_leap_year(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def days_in_month(year: int, month: int) -> int:
    if month == 2 and is_leap_year(year):
        return 29
    return _MONTH_DAYS[month - 1]


def first_weekday(year: int, month: int) -> int:
    """Monday-based weekday (0=Mon .. 6=Sun) of day 1, by Zeller's congruence."""
    q = 1
    m = month
    y = year
    if m < 3:
        m += 12
        y -= 1
    k = y % 100
    j = y // 100
    h = (q + (13 * (m + 1)) // 5 + k + k // 4 + j // 4 - 2 * j) % 7
    return (h + 5) % 7  # Zeller's 0 is Saturday


def day_grid(spec: CalendricSpec) -> DiscretePic:
    """The seven-column day grid: header row, then one row per week."""
    cells = ["   "] * first_weekday(spec.year, spec.month)
    cells.extend(
        f"{d:>{_CELL}}" for d in range(1, days_in_month(spec.year, spec.month) + 1)
    )
    while len(cells) % 7:
        cells.append("   ")
    rows = [" ".join(DAY_HEADER)]
    for i in range(0, len(cells), 7):
        rows.append(" ".join(cells[i : i + 7]))
    return DiscretePic(tuple(rows))


def calendric_month(spec: CalendricSpec, bold: bool = False) -> DiscretePic:
    """Banner title (month name and year) stacked over the day grid.

    `bold` doubles the banner glyphs horizontally.  Both parts are centred
    on the wider of the two, with one blank row between them.
    """
    title = banner(f"{MONTH_NAMES[spec.month - 1]} {spec.year}")
    if bold:
        title = title.scale(2, 1)
    grid = day_grid(spec)
    width = max(title.width, grid.width)
    return (
        _center(title, width)
        .vjoin(DiscretePic.blank(1, width))
        .vjoin(_center(grid, width))
    )


def _center(pic: DiscretePic, width: int) -> DiscretePic:
    left = (width - pic.width) // 2
    padded = DiscretePic.blank(pic.height, left).hjoin(pic)
    return padded.pad_to(pic.height, width)
