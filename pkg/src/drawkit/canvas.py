"""Raster drawing surface with user-coordinate scaling and a primitive counter.

The canvas maps a user rectangle linearly onto the pixel grid: (x_min,
y_min) lands on the centre of the bottom-left pixel and (x_max, y_max) on
the top-right, so the y axis points up.  Drawing is monotone - pixels only
ever change to the current pen color - and every line/point primitive
bumps `primitive_count`, which is the §-free cost unit the benchmark
harness reports.

Rasterization rule (normative for golden files): a segment is walked in
unit-pixel parametric steps, ceil(max(|dx|, |dy|)) of them, and at every
step a filled disc is stamped on the rounded step centre: all pixels at
integer offsets (di, dj) with di^2 + dj^2 <= stroke_radius^2, where the
stroke radius is pen_radius * min(width, height) pixels.  Offset (0, 0)
always qualifies, so every step paints at least one pixel.

Alongside the pixel grid the canvas keeps a primitive log, which the SVG
exporter replays as `line` and `circle` elements.
"""

import math

import numpy as np

from .colors import BLACK, WHITE, Color
from .errors import NumericError, RangeError
from .geometry import Circle, Point

DEFAULT_PEN_RADIUS = 0.002

_STAMP_CHUNK = 1 << 18  # max candidate-mask entries per numpy pass


class Canvas:
    def __init__(
        self,
        pixel_width: int,
        pixel_height: int,
        x_scale: tuple[float, float] = (0.0, 100.0),
        y_scale: tuple[float, float] = (0.0, 100.0),
    ):
        if pixel_width < 1 or pixel_height < 1:
            raise RangeError("pixel dimensions must be >= 1")
        for lo, hi in (x_scale, y_scale):
            if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
                raise RangeError(f"degenerate scale range ({lo}, {hi})")
        self.pixel_width = pixel_width
        self.pixel_height = pixel_height
        self.x_scale = (float(x_scale[0]), float(x_scale[1]))
        self.y_scale = (float(y_scale[0]), float(y_scale[1]))
        self.pen_color = BLACK
        self.pen_radius = DEFAULT_PEN_RADIUS
        self._pixels = np.empty((pixel_height, pixel_width, 3), dtype=np.uint8)
        self._pixels[:] = WHITE.rgb
        self._count = 0
        self._log: list[tuple] = []

    # -- state ----------------------------------------------------------

    @property
    def pixels(self) -> np.ndarray:
        """(height, width, 3) uint8 array; row 0 is the top pixel row."""
        return self._pixels

    @property
    def primitive_count(self) -> int:
        return self._count

    def reset_primitive_count(self):
        self._count = 0

    def set_pen_color(self, color: Color):
        self.pen_color = color

    def set_pen_radius(self, radius: float):
        if not math.isfinite(radius) or radius <= 0:
            raise RangeError(f"pen radius must be positive, got {radius}")
        self.pen_radius = radius

    @property
    def stroke_radius_px(self) -> float:
        return self.pen_radius * min(self.pixel_width, self.pixel_height)

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        """User coordinates to (possibly fractional) pixel coordinates."""
        x0, x1 = self.x_scale
        y0, y1 = self.y_scale
        fx = (x - x0) / (x1 - x0) * (self.pixel_width - 1)
        fy = (self.pixel_height - 1) * (1.0 - (y - y0) / (y1 - y0))
        return fx, fy

    # -- primitives -------------------------------------------------------

    def draw_point(self, p: Point):
        """Stamp one pen-radius disc; counts as one primitive."""
        fx, fy = self.to_px(p.x, p.y)
        self._count += 1
        self._log.append(("point", fx, fy, self.stroke_radius_px, self.pen_color))
        self._stamp(np.array([fx]), np.array([fy]), self.pen_color.rgb)

    def draw_line(self, p: Point, q: Point):
        """Stroke the segment p-q with the pen; counts as one primitive."""
        fx1, fy1 = self.to_px(p.x, p.y)
        fx2, fy2 = self.to_px(q.x, q.y)
        self._count += 1
        self._log.append(
            ("line", fx1, fy1, fx2, fy2, 2 * self.stroke_radius_px, self.pen_color)
        )
        sx, sy = _line_steps(fx1, fy1, fx2, fy2)
        self._stamp(sx, sy, self.pen_color.rgb)

    def draw_segments(self, endpoints: np.ndarray):
        """Batch-stroke an (n, 2, 2) array of user-space segments.

        Counts n primitives and logs one batch record; pixel output equals
        n individual draw_line calls.
        """
        endpoints = np.asarray(endpoints, dtype=np.float64)
        if endpoints.ndim != 3 or endpoints.shape[1:] != (2, 2):
            raise RangeError(f"expected an (n, 2, 2) array, got {endpoints.shape}")
        if not np.isfinite(endpoints).all():
            raise NumericError("segment endpoints must be finite")
        if len(endpoints) == 0:
            return
        px = self._px_batch(endpoints)
        self._count += len(px)
        self._log.append(("lines", px, 2 * self.stroke_radius_px, self.pen_color))
        x1, y1 = px[:, 0, 0], px[:, 0, 1]
        x2, y2 = px[:, 1, 0], px[:, 1, 1]
        nsteps = np.ceil(np.maximum(np.abs(x2 - x1), np.abs(y2 - y1))).astype(np.int64)
        for n in np.unique(nsteps):
            sel = nsteps == n
            if n == 0:
                self._stamp(x1[sel], y1[sel], self.pen_color.rgb)
                continue
            t = np.arange(n + 1) / n
            sx = (x1[sel, None] + (x2 - x1)[sel, None] * t).ravel()
            sy = (y1[sel, None] + (y2 - y1)[sel, None] * t).ravel()
            self._stamp(sx, sy, self.pen_color.rgb)

    def draw_circle_outline(self, c: Circle, chords: int = 360):
        """Stroke the periphery as a closed polyline of `chords` chords.

        Sets the pen color to the circle's own color; each chord counts as
        one line primitive, preserving the lines-drawn cost model.
        """
        if chords < 3:
            raise RangeError(f"need at least 3 chords, got {chords}")
        self.set_pen_color(c.color)
        verts = _circle_vertices(c, chords)
        segments = np.empty((chords, 2, 2))
        for k in range(chords):
            a, b = verts[k], verts[(k + 1) % chords]
            segments[k] = ((a.x, a.y), (b.x, b.y))
        self.draw_segments(segments)

    # -- filled circles ---------------------------------------------------

    def fill_circle_radial(self, c: Circle) -> int:
        """Fill by stroking 180 diameters, one per integer degree; returns 180."""
        self.set_pen_color(c.color)
        x, y, radius = c.center.x, c.center.y, c.radius
        segments = np.empty((180, 2, 2))
        for a in range(180):
            theta = a * math.pi / 180
            dx = radius * math.cos(theta)
            dy = radius * math.sin(theta)
            segments[a] = ((x + dx, y + dy), (x - dx, y - dy))
        self.draw_segments(segments)
        return 180

    def fill_circle_concentric(self, c: Circle, rings: int, chords_per_ring: int) -> int:
        """Fill by stroking `rings` nested outlines of `chords_per_ring` chords
        each, at radii k/rings of the full radius; returns rings * chords_per_ring.
        """
        if rings < 1:
            raise RangeError(f"rings must be >= 1, got {rings}")
        if chords_per_ring < 3:
            raise RangeError(f"chords_per_ring must be >= 3, got {chords_per_ring}")
        for k in range(1, rings + 1):
            ring = Circle(c.radius * k / rings, c.center, c.color)
            self.draw_circle_outline(ring, chords_per_ring)
        return rings * chords_per_ring

    # -- export -----------------------------------------------------------

    def to_ppm(self) -> bytes:
        header = f"P6\n{self.pixel_width} {self.pixel_height}\n255\n"
        return header.encode("ascii") + self._pixels.tobytes()

    def to_svg(self) -> bytes:
        parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.pixel_width}" height="{self.pixel_height}" '
            f'viewBox="0 0 {self.pixel_width} {self.pixel_height}">',
        ]
        for rec in self._log:
            if rec[0] == "line":
                _, x1, y1, x2, y2, width, color = rec
                parts.append(_svg_line(x1, y1, x2, y2, width, color))
            elif rec[0] == "point":
                _, cx, cy, r, color = rec
                parts.append(
                    f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
                    f'fill="{color.hex}"/>'
                )
            else:  # batched lines
                _, px, width, color = rec
                for (x1, y1), (x2, y2) in px:
                    parts.append(_svg_line(x1, y1, x2, y2, width, color))
        parts.append("</svg>")
        return ("\n".join(parts) + "\n").encode("utf-8")

    # -- rasterizer core ----------------------------------------------------

    def _px_batch(self, endpoints: np.ndarray) -> np.ndarray:
        x0, x1 = self.x_scale
        y0, y1 = self.y_scale
        out = np.empty_like(endpoints)
        out[..., 0] = (endpoints[..., 0] - x0) / (x1 - x0) * (self.pixel_width - 1)
        out[..., 1] = (self.pixel_height - 1) * (
            1.0 - (endpoints[..., 1] - y0) / (y1 - y0)
        )
        return out

    def _stamp(self, sx: np.ndarray, sy: np.ndarray, rgb: tuple[int, int, int]):
        """Stamp the stroke disc on the rounded centre of every step point."""
        dj, di = _disc_offsets(self.stroke_radius_px)
        cx = np.rint(sx).astype(np.int64)
        cy = np.rint(sy).astype(np.int64)
        chunk = max(1, _STAMP_CHUNK // len(dj))
        for start in range(0, len(cx), chunk):
            pc = (cx[start : start + chunk, None] + dj).ravel()
            pr = (cy[start : start + chunk, None] + di).ravel()
            keep = (
                (pc >= 0)
                & (pc < self.pixel_width)
                & (pr >= 0)
                & (pr < self.pixel_height)
            )
            self._pixels[pr[keep], pc[keep]] = rgb


def new_canvas(
    pixel_width: int = 512,
    pixel_height: int = 512,
    x_scale: tuple[float, float] = (0.0, 100.0),
    y_scale: tuple[float, float] = (0.0, 100.0),
) -> Canvas:
    """A white canvas with the StdDraw-style defaults (0..100 scales)."""
    return Canvas(pixel_width, pixel_height, x_scale, y_scale)


def export(cv: Canvas, fmt: str) -> bytes:
    """Serialize the canvas as 'ppm' (binary P6) or 'svg' (1.1 subset)."""
    if fmt == "ppm":
        return cv.to_ppm()
    if fmt == "svg":
        return cv.to_svg()
    raise RangeError(f"unknown export format {fmt!r}")


_DISC_CACHE: dict[float, tuple[np.ndarray, np.ndarray]] = {}


def _disc_offsets(radius: float) -> tuple[np.ndarray, np.ndarray]:
    """Integer (column, row) offsets inside a disc of the given radius."""
    got = _DISC_CACHE.get(radius)
    if got is None:
        reach = int(math.ceil(radius))
        span = np.arange(-reach, reach + 1)
        jj, ii = np.meshgrid(span, span)
        hit = jj * jj + ii * ii <= radius * radius
        got = _DISC_CACHE[radius] = (jj[hit], ii[hit])
    return got


def _line_steps(x1: float, y1: float, x2: float, y2: float):
    nsteps = int(math.ceil(max(abs(x2 - x1), abs(y2 - y1))))
    if nsteps == 0:
        return np.array([x1]), np.array([y1])
    t = np.arange(nsteps + 1) / nsteps
    return x1 + (x2 - x1) * t, y1 + (y2 - y1) * t


def _circle_vertices(c: Circle, chords: int) -> list[Point]:
    x, y, radius = c.center.x, c.center.y, c.radius
    verts = []
    for k in range(chords):
        theta = (k * 360.0 / chords) * math.pi / 180
        verts.append(Point(x + radius * math.cos(theta), y + radius * math.sin(theta)))
    return verts


def _svg_line(x1, y1, x2, y2, width, color: Color) -> str:
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{color.hex}" stroke-width="{_fmt(width)}" stroke-linecap="round"/>'
    )


def _fmt(v: float) -> str:
    return format(v, ".6g")
