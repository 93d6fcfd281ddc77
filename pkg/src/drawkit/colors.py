"""Named RGB colors used by circles, the canvas, and the plotters."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Color:
    """A named color with an 8-bit RGB triple."""

    name: str
    rgb: tuple[int, int, int]

    def __post_init__(self):
        if len(self.rgb) != 3 or any(not (0 <= c <= 255) for c in self.rgb):
            raise ValueError(f"rgb channels must be in 0..255, got {self.rgb}")

    @property
    def hex(self) -> str:
        r, g, b = self.rgb
        return f"#{r:02x}{g:02x}{b:02x}"


BLACK = Color("BLACK", (0, 0, 0))
WHITE = Color("WHITE", (255, 255, 255))
RED = Color("RED", (255, 0, 0))
GREEN = Color("GREEN", (0, 255, 0))
BLUE = Color("BLUE", (0, 0, 255))
YELLOW = Color("YELLOW", (255, 255, 0))

PALETTE: dict[str, Color] = {
    c.name: c for c in (BLACK, WHITE, RED, GREEN, BLUE, YELLOW)
}
