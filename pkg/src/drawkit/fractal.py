"""Dragon-curve generation by recursive four-transform expansion.

A curve of depth 0 is its base segment; depth n replaces the segment with
four depth-(n-1) copies, each endpoint pushed through one of four chained
transforms (scale by half first, then rotate, then shift):

    T1: scale(0.5, 0.5) . rotate(90)
    T2: scale(0.5, 0.5) . rotate(180) . shift(0.5, 0.5)
    T3: scale(0.5, 0.5) . rotate(-90) . shift(0.5, 0.5)
    T4: scale(0.5, 0.5) . rotate(180) . shift(1.0, 0.0)

Segments are enumerated in that call order (depth-first), so drawing is a
fold over the enumeration.  The expansion is evaluated level-wise on numpy
arrays with the same elementwise operation order as the chained Point
methods, so both routes produce bit-identical coordinates.

Depth n yields exactly 4**n segments, each 2**-n of the base length.
"""

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .canvas import Canvas
from .colors import BLACK, Color
from .errors import CapacityError, RangeError
from .geometry import Point

DEFAULT_MAX_DEPTH = 15
_CHUNK_DEPTH = 9  # at most 4**9 = 262144 segments per streamed array

# (rotation degrees, shift or None); scale is always (0.5, 0.5) and T1 has
# no shift call at all, preserving the exact chain applied to each endpoint.
_TRANSFORMS = (
    (90.0, None),
    (180.0, (0.5, 0.5)),
    (-90.0, (0.5, 0.5)),
    (180.0, (1.0, 0.0)),
)
_COS_SIN = tuple(
    (math.cos(angle * math.pi / 180), math.sin(angle * math.pi / 180))
    for angle, _ in _TRANSFORMS
)

# Intermediate Point values created per expansion step: both endpoints go
# through T1 (2 chained ops each) and T2..T4 (3 each) = 2 * (2 + 3 + 3 + 3).
POINTS_PER_EXPANSION = 22

# Window containing the unit-segment attractor with margin.
UNIT_WINDOW_X = (-0.5, 1.5)
UNIT_WINDOW_Y = (-0.5, 1.0)


class Segment(NamedTuple):
    a: Point
    b: Point

    def length(self) -> float:
        return self.a.distance_to(self.b)


@dataclass(frozen=True)
class DragonSpec:
    """Base segment, recursion depth, and drawing color."""

    start: Point
    finish: Point
    depth: int
    color: Color = BLACK

    def __post_init__(self):
        if self.depth < 0:
            raise RangeError(f"depth must be >= 0, got {self.depth}")


def transform_point(p: Point, index: int) -> Point:
    """Apply transform T{index+1} to a point via the chained Point methods."""
    angle, shift = _TRANSFORMS[index]
    q = p.scale(0.5, 0.5).rotate(angle)
    if shift is not None:
        q = q.shift(*shift)
    return q


def iter_segment_chunks(
    spec: DragonSpec, max_depth: int = DEFAULT_MAX_DEPTH
) -> Iterator[np.ndarray]:
    """Stream the curve's segments in enumeration order as (k, 2, 2) arrays.

    Bounded memory at any depth up to the cap; concatenating the chunks
    gives the full (4**depth, 2, 2) endpoint array.
    """
    _check_depth(spec.depth, max_depth)
    base = np.array(
        [[[spec.start.x, spec.start.y], [spec.finish.x, spec.finish.y]]],
        dtype=np.float64,
    )
    yield from _stream(base, spec.depth)


def dragon_segments(
    spec: DragonSpec, max_depth: int = DEFAULT_MAX_DEPTH
) -> list[Segment]:
    """The curve as a list of Segment values (materialized; small depths)."""
    out = []
    for chunk in iter_segment_chunks(spec, max_depth):
        out.extend(
            Segment(Point(ax, ay), Point(bx, by)) for (ax, ay), (bx, by) in chunk
        )
    return out


def segment_count(spec: DragonSpec, max_depth: int = DEFAULT_MAX_DEPTH) -> int:
    """Number of segments, counted by enumerating them."""
    return sum(len(chunk) for chunk in iter_segment_chunks(spec, max_depth))


def draw_dragon(cv: Canvas, spec: DragonSpec, max_depth: int = DEFAULT_MAX_DEPTH) -> int:
    """Draw every segment in spec.color, in enumeration order.

    Returns the number of segments drawn; primitive_count grows by the same
    amount.
    """
    cv.set_pen_color(spec.color)
    total = 0
    for chunk in iter_segment_chunks(spec, max_depth):
        cv.draw_segments(chunk)
        total += len(chunk)
    return total


def dragon_point_count(depth: int, max_depth: int = DEFAULT_MAX_DEPTH) -> int:
    """Intermediate Point values created by the chained-transform evaluation.

    Every scale/rotate/shift application creates one Point; an expansion
    step creates POINTS_PER_EXPANSION of them, and a depth-n curve performs
    (4**n - 1) / 3 expansion steps.
    """
    if depth < 0:
        raise RangeError(f"depth must be >= 0, got {depth}")
    _check_depth(depth, max_depth)
    return POINTS_PER_EXPANSION * (4**depth - 1) // 3


def _check_depth(depth: int, max_depth: int):
    if depth > max_depth:
        raise CapacityError(
            f"depth {depth} would enumerate 4^{depth} segments (cap {max_depth})"
        )


def _stream(pts: np.ndarray, depth: int) -> Iterator[np.ndarray]:
    if depth <= _CHUNK_DEPTH:
        for _ in range(depth):
            pts = _expand_level(pts)
        yield pts
    else:
        children = _expand_level(pts)  # (4, 2, 2), in transform order
        for t in range(4):
            yield from _stream(children[t : t + 1], depth - 1)


def _expand_level(pts: np.ndarray) -> np.ndarray:
    """One expansion level: (n, 2, 2) -> (4n, 2, 2), children adjacent.

    Elementwise steps mirror Point.scale / Point.rotate / Point.shift
    exactly (same constants, same operation order), so values match the
    chained-method route bit for bit.
    """
    out = np.empty((pts.shape[0], 4, 2, 2), dtype=np.float64)
    xs = pts[..., 0] * 0.5
    ys = pts[..., 1] * 0.5
    for t, (_, shift) in enumerate(_TRANSFORMS):
        c, s = _COS_SIN[t]
        xr = xs * c - ys * s
        yr = xs * s + ys * c
        if shift is not None:
            xr = xr + shift[0]
            yr = yr + shift[1]
        out[:, t, :, 0] = xr
        out[:, t, :, 1] = yr
    return out.reshape(-1, 2, 2)
