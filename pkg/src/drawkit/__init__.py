"""drawkit: picture combinators, text tabulation, a raster canvas, dragon
curves, and an empirical complexity benchmark harness."""

from .animation import (
    moving_circle_centers,
    moving_circle_frames,
    sample_contained_center,
    write_frames,
)
from .bench import (
    FibResult,
    Sample,
    SampleTable,
    bench_sorts,
    export_csv,
    fibonacci,
    insertion_sort,
    measure,
    merge_sort,
    parse_csv,
    plot_series,
)
from .canvas import Canvas, export, new_canvas
from .colors import BLACK, BLUE, GREEN, PALETTE, RED, WHITE, YELLOW, Color
from .errors import (
    CapacityError,
    CorrectnessError,
    DimensionError,
    DrawkitError,
    MeasurementError,
    NumericError,
    PlacementError,
    RangeError,
    UnsupportedCharacterError,
    WordOverflowError,
)
from .fractal import (
    DragonSpec,
    Segment,
    draw_dragon,
    dragon_point_count,
    dragon_segments,
    iter_segment_chunks,
    segment_count,
)
from .geometry import Circle, Point
from .glyphs import banner, glyph
from .monthcal import CalendricSpec, calendric_month, day_grid, days_in_month, first_weekday
from .pictures import DiscretePic, pyramid, pyramid_row, uniform_line
from .rng import SplitMix64
from .text_layout import (
    TabulationParams,
    TextBlock,
    center,
    fill_line,
    right_justify,
    split_words,
    tabulate,
    uppercase,
)

__version__ = "0.1.0"
