"""Command-line front door.

Parsing is hand-rolled so usage messages and exit codes stay bit-stable
across platforms and interpreter versions: 0 success, 1 domain errors
(overflow word, impossible placement, capacity), 2 usage errors.
"""

import sys

from . import bench as bench_mod
from .animation import SAMPLERS, moving_circle_frames, write_frames
from .canvas import Canvas
from .colors import BLACK, BLUE, GREEN, PALETTE, RED, YELLOW
from .errors import DrawkitError
from .fractal import (
    UNIT_WINDOW_X,
    UNIT_WINDOW_Y,
    DragonSpec,
    draw_dragon,
)
from .geometry import Circle, Point
from .monthcal import CalendricSpec, calendric_month
from .pictures import pyramid
from .text_layout import TabulationParams, TextBlock, tabulate

RING_RADIUS = 9.0
RING_LAYOUT = (  # color, centre; the standard interlocking two-row arrangement
    (BLUE, Point(30.0, 55.0)),
    (YELLOW, Point(40.0, 45.0)),
    (BLACK, Point(50.0, 55.0)),
    (GREEN, Point(60.0, 45.0)),
    (RED, Point(70.0, 55.0)),
)

USAGE = """\
usage: drawkit <command> [arguments]

commands:
  pyramid <h> <char> [--trim]
      print an h-row character pyramid; --trim strips trailing spaces
  calendar <year> <month> [--bold]
      print a month calendar (Gregorian, year >= 1583); --bold widens the banner
  tabulate <w> <h> [--gap G] [--force] [--raw]
      read text from stdin, write it in w-wide, h-tall columns to stdout;
      --force allows over-wide words, --raw keeps trailing padding
  dragon <depth> [--out PATH] [--color NAME]
      render the dragon curve to PATH (.ppm or .svg; stdout PPM if omitted)
  movingcircle <x> <y> <R> <r> --frames N --seed S --out DIR --sampler polar|rectangular
      write N animation frames plus a manifest into DIR
  fill --method radial|concentric --radius R [--rings K] [--chords C] --out PATH
      draw a filled circle (radius in user units, canvas 0..100)
  bench fib|fill|sort [--csv PATH] [--plot PATH.ppm] [--reps K] [--seed S]
      run a benchmark; CSV goes to stdout unless --csv is given
  rings --out PATH [--filled]
      draw the five interlocking rings; --filled paints them radially

drawkit --help prints this message.  Colors: BLACK WHITE RED GREEN BLUE YELLOW.
"""


class UsageError(Exception):
    pass


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    if argv and argv[0] in ("--help", "-h"):
        print(USAGE, end="")
        return 0
    if not argv:
        print("usage error: missing command", file=sys.stderr)
        print(USAGE, end="", file=sys.stderr)
        return 2
    name, args = argv[0], argv[1:]
    handler = _COMMANDS.get(name)
    if handler is None:
        print(f"usage error: unknown command {name!r}", file=sys.stderr)
        print(USAGE, end="", file=sys.stderr)
        return 2
    try:
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DrawkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


# -- commands ---------------------------------------------------------------


def _cmd_pyramid(args) -> int:
    pos, flags = _split(args, {"--trim": False})
    h, char = _exactly(pos, 2, "pyramid <h> <char>")
    height = _int("h", h)
    if height < 1:
        raise UsageError("h must be >= 1")
    if len(char) != 1:
        raise UsageError("char must be a single character")
    text = pyramid(height, char).render()
    if flags["--trim"]:
        text = "".join(line.rstrip() + "\n" for line in text.splitlines())
    sys.stdout.write(text)
    return 0


def _cmd_calendar(args) -> int:
    pos, flags = _split(args, {"--bold": False})
    year_s, month_s = _exactly(pos, 2, "calendar <year> <month>")
    year, month = _int("year", year_s), _int("month", month_s)
    if year < 1583:
        raise UsageError("year must be >= 1583")
    if not 1 <= month <= 12:
        raise UsageError("month must be in 1..12")
    pic = calendric_month(CalendricSpec(year, month), bold=flags["--bold"])
    sys.stdout.write(pic.render())
    return 0


def _cmd_tabulate(args) -> int:
    pos, flags = _split(args, {"--gap": True, "--force": False, "--raw": False})
    w_s, h_s = _exactly(pos, 2, "tabulate <w> <h>")
    width, height = _int("w", w_s), _int("h", h_s)
    gap = _int("gap", flags["--gap"]) if flags["--gap"] is not None else 2
    if width < 1 or height < 1:
        raise UsageError("w and h must be >= 1")
    if gap < 0:
        raise UsageError("gap must be >= 0")
    params = TabulationParams(width, height, gap)
    text = tabulate(TextBlock(sys.stdin.read()), params, force=flags["--force"])
    if not flags["--raw"]:
        text = "".join(line.rstrip() + "\n" for line in text.splitlines())
    sys.stdout.write(text)
    return 0


def _cmd_dragon(args) -> int:
    pos, flags = _split(args, {"--out": True, "--color": True})
    (depth_s,) = _exactly(pos, 1, "dragon <depth>")
    depth = _int("depth", depth_s)
    if depth < 0:
        raise UsageError("depth must be >= 0")
    color = _color(flags["--color"]) if flags["--color"] is not None else BLACK
    cv = Canvas(512, 384, UNIT_WINDOW_X, UNIT_WINDOW_Y)
    spec = DragonSpec(Point(0.0, 0.0), Point(1.0, 0.0), depth, color)
    draw_dragon(cv, spec)
    _write_image(cv, flags["--out"])
    return 0


def _cmd_movingcircle(args) -> int:
    pos, flags = _split(
        args,
        {"--frames": True, "--seed": True, "--out": True, "--sampler": True},
    )
    xs, ys, rs_big, rs_small = _exactly(pos, 4, "movingcircle <x> <y> <R> <r>")
    x, y = _float("x", xs), _float("y", ys)
    big, small = _float("R", rs_big), _float("r", rs_small)
    if big <= 0 or small <= 0:
        raise UsageError("R and r must be > 0")
    frames = _int("frames", _required(flags, "--frames"))
    seed = _int("seed", _required(flags, "--seed"))
    out_dir = _required(flags, "--out")
    sampler = _required(flags, "--sampler")
    if sampler not in SAMPLERS:
        raise UsageError(f"sampler must be one of {'|'.join(SAMPLERS)}")
    if frames < 1:
        raise UsageError("frames must be >= 1")
    canvases = moving_circle_frames(x, y, big, small, sampler, frames, seed)
    write_frames(canvases, out_dir)
    return 0


def _cmd_fill(args) -> int:
    pos, flags = _split(
        args,
        {"--method": True, "--radius": True, "--rings": True,
         "--chords": True, "--out": True},
    )
    _exactly(pos, 0, "fill takes no positional arguments")
    method = _required(flags, "--method")
    if method not in ("radial", "concentric"):
        raise UsageError("method must be radial or concentric")
    radius = _float("radius", _required(flags, "--radius"))
    if radius <= 0:
        raise UsageError("radius must be > 0")
    out = _required(flags, "--out")
    if method == "radial":
        if flags["--rings"] is not None or flags["--chords"] is not None:
            raise UsageError("--rings/--chords only apply to the concentric method")
    cv = Canvas(512, 512)
    cv.set_pen_radius(0.01)
    circle = Circle(radius, Point(50.0, 50.0), BLACK)
    if method == "radial":
        cv.fill_circle_radial(circle)
    else:
        rings = _int("rings", flags["--rings"]) if flags["--rings"] is not None else 160
        chords = _int("chords", flags["--chords"]) if flags["--chords"] is not None else 180
        if rings < 1:
            raise UsageError("rings must be >= 1")
        if chords < 3:
            raise UsageError("chords must be >= 3")
        cv.fill_circle_concentric(circle, rings, chords)
    _write_image(cv, out)
    return 0


def _cmd_bench(args) -> int:
    pos, flags = _split(
        args, {"--csv": True, "--plot": True, "--reps": True, "--seed": True}
    )
    (which,) = _exactly(pos, 1, "bench fib|fill|sort")
    reps = _int("reps", flags["--reps"]) if flags["--reps"] is not None else 5
    seed = _int("seed", flags["--seed"]) if flags["--seed"] is not None else 1
    if reps < 1:
        raise UsageError("reps must be >= 1")
    if which == "fib":
        runners = {
            strategy: (lambda n, s=strategy: bench_mod.fibonacci(int(n), s))
            for strategy in bench_mod.FIB_STRATEGIES
        }
        table = bench_mod.measure(range(1, 31), runners, repetitions=reps)
    elif which == "fill":
        table = bench_mod.measure(
            (5.0, 10.0, 20.0, 40.0),
            {"radial": _fill_runner("radial"), "concentric": _fill_runner("concentric")},
            repetitions=reps,
        )
    elif which == "sort":
        table = bench_mod.bench_sorts(
            (500, 1000, 2000, 4000), repetitions=reps, seed=seed
        )
    else:
        raise UsageError(f"unknown benchmark {which!r}; expected fib, fill or sort")
    csv = bench_mod.export_csv(table)
    if flags["--csv"] is not None:
        with open(flags["--csv"], "wb") as fh:
            fh.write(csv)
    else:
        sys.stdout.buffer.write(csv)
    if flags["--plot"] is not None:
        if not flags["--plot"].endswith(".ppm"):
            raise UsageError("--plot path must end in .ppm")
        cv = bench_mod.plot_series(table, 800, 600)
        with open(flags["--plot"], "wb") as fh:
            fh.write(cv.to_ppm())
    return 0


def _cmd_rings(args) -> int:
    pos, flags = _split(args, {"--out": True, "--filled": False})
    _exactly(pos, 0, "rings takes no positional arguments")
    out = _required(flags, "--out")
    cv = Canvas(512, 512)
    cv.set_pen_radius(0.01)
    for color, center in RING_LAYOUT:
        circle = Circle(RING_RADIUS, center, color)
        if flags["--filled"]:
            cv.fill_circle_radial(circle)
        else:
            cv.draw_circle_outline(circle)
    _write_image(cv, out)
    return 0


_COMMANDS = {
    "pyramid": _cmd_pyramid,
    "calendar": _cmd_calendar,
    "tabulate": _cmd_tabulate,
    "dragon": _cmd_dragon,
    "movingcircle": _cmd_movingcircle,
    "fill": _cmd_fill,
    "bench": _cmd_bench,
    "rings": _cmd_rings,
}


# -- parsing and output helpers ----------------------------------------------


def _split(args, spec: dict[str, bool]):
    """Split into positionals and flags; `spec` maps flag -> takes a value."""
    positionals = []
    flags = {name: (None if takes else False) for name, takes in spec.items()}
    i = 0
    while i < len(args):
        arg = args[i]
        if arg.startswith("--"):
            if arg not in spec:
                raise UsageError(f"unknown flag {arg}")
            if spec[arg]:
                if i + 1 >= len(args):
                    raise UsageError(f"flag {arg} needs a value")
                flags[arg] = args[i + 1]
                i += 2
            else:
                flags[arg] = True
                i += 1
        else:
            positionals.append(arg)
            i += 1
    return positionals, flags


def _exactly(positionals, n, usage):
    if len(positionals) != n:
        raise UsageError(f"expected {usage}")
    return positionals


def _required(flags, name):
    value = flags[name]
    if value is None:
        raise UsageError(f"flag {name} is required")
    return value


def _int(name, s) -> int:
    try:
        return int(s, 10)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {s!r}") from None


def _float(name, s) -> float:
    try:
        value = float(s)
    except ValueError:
        raise UsageError(f"{name} must be a number, got {s!r}") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise UsageError(f"{name} must be finite")
    return value


def _color(name: str):
    color = PALETTE.get(name.upper())
    if color is None:
        raise UsageError(f"unknown color {name!r}; expected one of {' '.join(PALETTE)}")
    return color


def _fill_runner(method: str):
    def run(radius: float):
        cv = Canvas(512, 512)
        cv.set_pen_radius(0.01)
        circle = Circle(radius, Point(50.0, 50.0), BLACK)
        if method == "radial":
            cv.fill_circle_radial(circle)
        else:
            cv.fill_circle_concentric(circle, 160, 180)

    return run


def _write_image(cv: Canvas, out: str | None):
    if out is None:
        sys.stdout.buffer.write(cv.to_ppm())
        return
    if out.endswith(".svg"):
        data = cv.to_svg()
    elif out.endswith(".ppm"):
        data = cv.to_ppm()
    else:
        raise UsageError(f"output path must end in .ppm or .svg, got {out!r}")
    with open(out, "wb") as fh:
        fh.write(data)


if __name__ == "__main__":
    sys.exit(main())
