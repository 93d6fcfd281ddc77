"""Immutable 2-D points and circles.

Transforms return new values; angles are degrees, counter-clockwise about
the origin, converted as angle * pi / 180.  The circle predicates use
inclusive <= comparisons in plain double precision with no epsilon, so
boundary contact counts as containment/intersection; callers needing
tolerance wrap these.
"""

import math
from dataclasses import dataclass, replace

from .colors import BLACK, Color
from .errors import NumericError, RangeError


@dataclass(frozen=True)
class Point:
    """A point in the Cartesian plane; coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NumericError(f"point coordinates must be finite: ({self.x}, {self.y})")

    def scale(self, a: float, b: float) -> "Point":
        return Point(a * self.x, b * self.y)

    def shift(self, a: float, b: float) -> "Point":
        return Point(self.x + a, self.y + b)

    def rotate(self, angle: float) -> "Point":
        """Rotate `angle` degrees counter-clockwise about the origin."""
        theta = angle * math.pi / 180
        c, s = math.cos(theta), math.sin(theta)
        return Point(self.x * c - self.y * s, self.x * s + self.y * c)

    def distance_to(self, other: "Point") -> float:
        dx = self.x - other.x
        dy = self.y - other.y
        return math.sqrt(dx * dx + dy * dy)


@dataclass(frozen=True)
class Circle:
    """A circle with positive radius, a centre point, and a named color."""

    radius: float
    center: Point
    color: Color = BLACK

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise RangeError(f"radius must be positive and finite, got {self.radius}")

    def contains_point(self, p: Point) -> bool:
        """Boundary inclusive: distance(p, centre) <= radius."""
        return p.distance_to(self.center) <= self.radius

    def contains_circle(self, other: "Circle") -> bool:
        """True when `other` lies entirely inside (boundary contact allowed)."""
        return self.center.distance_to(other.center) + other.radius <= self.radius

    def intersects(self, other: "Circle") -> bool:
        """Boundary inclusive: centres at most radius + other.radius apart."""
        return self.center.distance_to(other.center) <= self.radius + other.radius

    def disjoint(self, other: "Circle") -> bool:
        return not self.intersects(other)

    def area(self) -> float:
        return math.pi * self.radius * self.radius

    def periphery(self) -> float:
        return math.pi * 2 * self.radius

    def measures(self) -> tuple[float, float]:
        """(area, periphery)."""
        return self.area(), self.periphery()

    def move(self, p: Point) -> "Circle":
        """The same circle centred at `p` (radius and color preserved)."""
        return replace(self, center=p)
