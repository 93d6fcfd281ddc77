"""Empirical complexity measurement and plotting.

Timing uses a monotonic clock with one warm-up run and a median over k
repetitions; deterministic operation counts (function invocations, loop
iterations) are the primary complexity signal, wall-clock the ordinal one.
Results collect into a SampleTable, which exports to CSV bit-exactly and
plots onto a Canvas.
"""

import statistics
import time
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .canvas import Canvas
from .colors import BLACK, BLUE, GREEN, RED, YELLOW
from .errors import CorrectnessError, MeasurementError, RangeError
from .geometry import Point
from .glyphs import FONT_5X7, banner
from .rng import SplitMix64

FIB_STRATEGIES = ("stack_recursive", "tail_recursive", "iterative")
SORT_ALGORITHMS = ("insertion", "merge")
UNITS = ("seconds", "count")

_SERIES_COLORS = (BLUE, RED, GREEN, BLACK, YELLOW)


class Sample(NamedTuple):
    x: float
    method: str
    value: float
    unit: str


class FibResult(NamedTuple):
    n: int
    value: int
    op_count: int


class SampleTable:
    """Measurement rows; x values strictly increase within each method and
    the unit is homogeneous across the table."""

    def __init__(self, rows: Iterable[Sample | tuple]):
        rows = tuple(Sample(float(x), str(m), float(v), str(u)) for x, m, v, u in rows)
        last: dict[str, float] = {}
        for row in rows:
            if row.unit not in UNITS:
                raise RangeError(f"unknown unit {row.unit!r}")
            if rows[0].unit != row.unit:
                raise RangeError("units must be homogeneous per table")
            if "," in row.method or "\n" in row.method:
                raise RangeError(f"method label {row.method!r} is not CSV-safe")
            if row.method in last and row.x <= last[row.method]:
                raise RangeError(
                    f"x values for {row.method!r} must be strictly increasing"
                )
            last[row.method] = row.x
        self._rows = rows

    @property
    def rows(self) -> tuple[Sample, ...]:
        return self._rows

    def methods(self) -> list[str]:
        seen = []
        for row in self._rows:
            if row.method not in seen:
                seen.append(row.method)
        return seen

    def series(self, method: str) -> list[tuple[float, float]]:
        return [(r.x, r.value) for r in self._rows if r.method == method]

    def __eq__(self, other):
        if not isinstance(other, SampleTable):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self):
        return f"SampleTable({len(self._rows)} rows)"


# -- Fibonacci strategies -----------------------------------------------


def fibonacci(n: int, strategy: str) -> FibResult:
    """The n-th Fibonacci number (fib(0)=0, fib(1)=1) plus the strategy's cost.

    op_count is total invocations for the recursive strategies and loop
    iterations for the iterative one, so curves can be compared without a
    clock.
    """
    if not 0 <= n <= 92:
        raise RangeError(f"n must be in 0..92, got {n}")
    if strategy == "stack_recursive":
        calls = 0

        def rec(k: int) -> int:
            nonlocal calls
            calls += 1
            if k < 2:
                return k
            return rec(k - 1) + rec(k - 2)

        return FibResult(n, rec(n), calls)

    if strategy == "tail_recursive":
        if n == 0:
            return FibResult(0, 0, 0)
        calls = 0

        def tail(k: int, a: int, b: int) -> int:
            nonlocal calls
            calls += 1
            if k == 1:
                return b
            return tail(k - 1, b, a + b)

        return FibResult(n, tail(n, 0, 1), calls)

    if strategy == "iterative":
        if n == 0:
            return FibResult(0, 0, 0)
        a, b = 0, 1
        iterations = 0
        for _ in range(n - 1):
            a, b = b, a + b
            iterations += 1
        return FibResult(n, b, iterations)

    raise RangeError(f"unknown strategy {strategy!r}; expected one of {FIB_STRATEGIES}")


# -- timing harness -------------------------------------------------------


def measure(
    xs: Sequence[float],
    runners: Mapping[str, Callable[[float], object]],
    repetitions: int = 5,
) -> SampleTable:
    """Median wall-clock seconds of runner(x) over a parameter sweep.

    Each (method, x) pair gets one untimed warm-up, then `repetitions`
    timed runs on the monotonic clock; the table holds the medians, sorted
    by x within each method.
    """
    if repetitions < 1:
        raise RangeError(f"repetitions must be >= 1, got {repetitions}")
    xs = sorted(xs)
    if len(set(xs)) != len(xs):
        raise RangeError("sweep values must be distinct")
    rows = []
    for method, runner in runners.items():
        for x in xs:
            try:
                runner(x)  # warm-up
                times = []
                for _ in range(repetitions):
                    t0 = time.perf_counter()
                    runner(x)
                    times.append(time.perf_counter() - t0)
            except Exception as exc:
                raise MeasurementError(method, x) from exc
            rows.append(Sample(x, method, statistics.median(times), "seconds"))
    return SampleTable(rows)


# -- sorting benchmark ------------------------------------------------------


def insertion_sort(values: Sequence[int]) -> list[int]:
    out = list(values)
    for i in range(1, len(out)):
        key = out[i]
        j = i - 1
        while j >= 0 and out[j] > key:
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = key
    return out


def merge_sort(values: Sequence[int]) -> list[int]:
    items = list(values)
    if len(items) <= 1:
        return items
    mid = len(items) // 2
    left = merge_sort(items[:mid])
    right = merge_sort(items[mid:])
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged


_SORTS = {"insertion": insertion_sort, "merge": merge_sort}


def sort_input(size: int, seed: int, index: int = 0) -> list[int]:
    """Deterministic uniform 64-bit integers for benchmark input."""
    rng = SplitMix64.for_stream(seed, index)
    return [rng.next_u64() for _ in range(size)]


def bench_sorts(
    sizes: Sequence[int],
    algorithms: Sequence[str] = SORT_ALGORITHMS,
    repetitions: int = 3,
    seed: int = 1,
) -> SampleTable:
    """Median sort times per (size, algorithm) on identical seeded inputs.

    Every algorithm's output is checked against the reference sort before
    any timing; a mismatch aborts the whole benchmark.
    """
    if list(sizes) != sorted(set(sizes)):
        raise RangeError("sizes must be strictly ascending")
    if repetitions < 1:
        raise RangeError(f"repetitions must be >= 1, got {repetitions}")
    for algo in algorithms:
        if algo not in _SORTS:
            raise RangeError(f"unknown algorithm {algo!r}")
    inputs = {size: sort_input(size, seed, i) for i, size in enumerate(sizes)}
    rows = []
    for algo in algorithms:
        fn = _SORTS[algo]
        for size in sizes:
            data = inputs[size]
            if fn(data) != sorted(data):
                raise CorrectnessError(f"{algo} sort produced unsorted output at n={size}")
            times = []
            for _ in range(repetitions):
                t0 = time.perf_counter()
                fn(data)
                times.append(time.perf_counter() - t0)
            rows.append(Sample(size, algo, statistics.median(times), "seconds"))
    return SampleTable(rows)


# -- CSV ------------------------------------------------------------------

CSV_HEADER = "x,method,value,unit"


def export_csv(table: SampleTable) -> bytes:
    """Bit-exact CSV: header then one row per sample, LF endings, '.' decimals."""
    lines = [CSV_HEADER]
    lines.extend(
        f"{_fmt_num(r.x)},{r.method},{_fmt_num(r.value)},{r.unit}"
        for r in table.rows
    )
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_csv(data: bytes) -> SampleTable:
    """Inverse of export_csv."""
    lines = data.decode("ascii").split("\n")
    if not lines or lines[0] != CSV_HEADER:
        raise RangeError("missing CSV header")
    rows = []
    for line in lines[1:]:
        if line == "":
            continue
        x, method, value, unit = line.split(",")
        rows.append(Sample(float(x), method, float(value), unit))
    return SampleTable(rows)


def _fmt_num(v: float) -> str:
    if v == int(v):
        return str(int(v))
    return repr(v)


# -- plotting -----------------------------------------------------------


def plot_series(table: SampleTable, pixel_width: int, pixel_height: int) -> Canvas:
    """Plot each method as a colored polyline with axes, ticks, and a legend.

    The canvas covers [min x, max x] horizontally and [0, 1.05 * max value]
    vertically; the legend names are stamped from banner glyphs as points,
    one pixel per cell, in each series' color.
    """
    if not table.rows:
        raise RangeError("cannot plot an empty table")
    xs = [r.x for r in table.rows]
    vals = [r.value for r in table.rows]
    x_min, x_max = min(xs), max(xs)
    if x_min == x_max:
        x_min, x_max = x_min - 0.5, x_max + 0.5
    y_top = 1.05 * max(vals)
    if y_top <= 0:
        y_top = 1.0

    cv = Canvas(pixel_width, pixel_height, (x_min, x_max), (0.0, y_top))
    cv.draw_line(Point(x_min, 0.0), Point(x_max, 0.0))
    cv.draw_line(Point(x_min, 0.0), Point(x_min, y_top))
    for k in range(1, 5):
        tx = x_min + (x_max - x_min) * k / 4
        cv.draw_line(Point(tx, 0.0), Point(tx, 0.02 * y_top))
        ty = y_top * k / 4
        cv.draw_line(Point(x_min, ty), Point(x_min + 0.02 * (x_max - x_min), ty))

    ux = (x_max - x_min) / max(pixel_width - 1, 1)
    uy = y_top / max(pixel_height - 1, 1)
    for k, method in enumerate(table.methods()):
        color = _SERIES_COLORS[k % len(_SERIES_COLORS)]
        cv.set_pen_color(color)
        pts = [Point(x, v) for x, v in table.series(method)]
        for p in pts:
            cv.draw_point(p)
        for a, b in zip(pts, pts[1:]):
            cv.draw_line(a, b)
        _stamp_label(
            cv,
            method,
            x_min + 8 * ux,
            y_top - (4 + k * 10) * uy,
            ux,
            uy,
        )
    return cv


def _stamp_label(cv: Canvas, method: str, x0: float, y0: float, ux: float, uy: float):
    label = "".join(
        ch if ch in FONT_5X7 else " " for ch in method.upper()
    )
    pic = banner(label)
    for i, row in enumerate(pic.rows):
        for j, ch in enumerate(row):
            if ch != " ":
                cv.draw_point(Point(x0 + j * ux, y0 - i * uy))
