"""Moving-circle animation: rejection sampling plus per-frame canvases.

A small circle of radius r is placed uniformly at random inside a fixed
circle of radius R; candidates are rejected until the placement keeps the
whole small circle inside (centre distance + r <= R).  Each frame redraws
both circles on a fresh canvas, so a seeded run is byte-reproducible.

Frame i draws its candidates from SplitMix64 stream i of the user seed,
which keeps frames independent of each other's rejection counts.
"""

import json
import math
import os

from .canvas import Canvas
from .colors import BLACK, RED
from .errors import PlacementError, RangeError
from .geometry import Circle, Point
from .rng import SplitMix64

SAMPLERS = ("polar", "rectangular")
FRAME_INTERVAL_US = 200
MANIFEST_NAME = "manifest.json"


def sample_contained_center(
    x: float, y: float, big_radius: float, small_radius: float,
    sampler: str, rng: SplitMix64,
) -> Point:
    """Draw candidate centres from `rng` until one keeps the small circle
    inside the fixed circle; returns the accepted centre.

    polar: angle uniform in [0, 360), distance uniform in [0, R).
    rectangular: both coordinates uniform over [x - R, x + R] / [y - R, y + R].
    """
    if sampler not in SAMPLERS:
        raise RangeError(f"unknown sampler {sampler!r}; expected one of {SAMPLERS}")
    if not 0 < small_radius < big_radius:
        raise PlacementError(
            f"moving radius {small_radius} can never fit inside {big_radius}"
        )
    while True:
        if sampler == "polar":
            angle = rng.uniform() * 360.0
            dist = rng.uniform() * big_radius
            theta = angle * math.pi / 180
            x1 = dist * math.cos(theta) + x
            y1 = dist * math.sin(theta) + y
        else:
            x1 = rng.uniform() * 2 * big_radius + x - big_radius
            y1 = rng.uniform() * 2 * big_radius + y - big_radius
        d = math.sqrt((x - x1) * (x - x1) + (y - y1) * (y - y1))
        if d + small_radius <= big_radius:
            return Point(x1, y1)


def moving_circle_centers(
    x: float, y: float, big_radius: float, small_radius: float,
    sampler: str, n_frames: int, seed: int,
) -> list[Point]:
    """The accepted centre for each of `n_frames` frames."""
    if n_frames < 0:
        raise RangeError(f"n_frames must be >= 0, got {n_frames}")
    return [
        sample_contained_center(
            x, y, big_radius, small_radius, sampler, SplitMix64.for_stream(seed, i)
        )
        for i in range(n_frames)
    ]


def moving_circle_frames(
    x: float, y: float, big_radius: float, small_radius: float,
    sampler: str, n_frames: int, seed: int,
    pixel_width: int = 512, pixel_height: int = 512,
) -> list[Canvas]:
    """One canvas per frame: the fixed circle in black, the moving one in red."""
    frames = []
    for center in moving_circle_centers(
        x, y, big_radius, small_radius, sampler, n_frames, seed
    ):
        cv = Canvas(pixel_width, pixel_height)
        cv.set_pen_radius(0.01)
        cv.draw_circle_outline(Circle(big_radius, Point(x, y), BLACK))
        cv.draw_circle_outline(Circle(small_radius, center, RED))
        frames.append(cv)
    return frames


def write_frames(frames: list[Canvas], out_dir: str) -> list[str]:
    """Write numbered PPM frames plus a manifest recording the frame interval.

    The 200-microsecond per-frame freeze becomes manifest metadata instead
    of a real-time sleep, keeping runs deterministic and headless.
    """
    os.makedirs(out_dir, exist_ok=True)
    names = []
    for i, cv in enumerate(frames):
        name = f"frame_{i:04d}.ppm"
        with open(os.path.join(out_dir, name), "wb") as fh:
            fh.write(cv.to_ppm())
        names.append(name)
    manifest = {"frame_interval_us": FRAME_INTERVAL_US, "frames": names}
    with open(os.path.join(out_dir, MANIFEST_NAME), "w", encoding="ascii") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return names
