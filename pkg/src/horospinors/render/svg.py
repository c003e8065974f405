"""
SVG rendering of decorated horocycles in the upper half plane.

Circles are tangent to the real axis at their centre and lines are horizontal.
Each decoration is an arrow at the north pole (or at the middle of a line),
pointing right for direction 1 and up for direction i.
"""

from __future__ import annotations

import cmath
from collections.abc import Sequence

import svgwrite

from horospinors.config import config
from horospinors.horospheres import DecoratedHorosphereUHS, Finite
from horospinors.render.base import Renderer, Window, bounding_window
from horospinors.utils import logger


class SvgRenderer(Renderer):
    """Renderer producing a standalone SVG 1.1 document"""

    def __init__(
        self,
        width: int | None = None,
        height: int | None = None,
        window: Window | None = None,
        padding: float | None = None,
    ):
        """
        Initialize the SVG renderer.

        Args:
            width: Document width in pixels (default: config.svg_width)
            height: Document height in pixels (default: config.svg_height)
            window: Region of the upper half plane to show (default: padded bounding box)
            padding: Padding fraction for the default window (default: config.svg_padding)
        """
        self.width = config.svg_width if width is None else width
        self.height = config.svg_height if height is None else height
        self.window = window
        self.padding = config.svg_padding if padding is None else padding
        self.stroke_width = config.svg_stroke_width
        self.arrow_length = config.svg_arrow_fraction * min(self.width, self.height)

    def get_info(self) -> dict:
        info = {"format": "svg", "width": self.width, "height": self.height}
        if self.window is not None:
            w = self.window
            info["window"] = [w.x_min, w.y_min, w.x_max, w.y_max]
        return info

    def render(
        self,
        horospheres: Sequence[DecoratedHorosphereUHS],
        labels: Sequence[str] | None = None,
    ) -> str:
        window = self.window or bounding_window(horospheres, self.padding)
        scale = min(self.width / window.width, self.height / window.height)
        offset_x = (self.width - scale * window.width) / 2
        offset_y = (self.height - scale * window.height) / 2

        def to_screen(x: float, y: float) -> tuple[float, float]:
            return (
                offset_x + (x - window.x_min) * scale,
                offset_y + (window.y_max - y) * scale,
            )

        dwg = svgwrite.Drawing(size=(self.width, self.height), profile="full", debug=False)
        dwg.add(dwg.rect(insert=(0, 0), size=(self.width, self.height), fill="white"))
        dwg.add(
            dwg.line(
                to_screen(window.x_min, 0.0),
                to_screen(window.x_max, 0.0),
                stroke="gray",
                stroke_width=self.stroke_width,
                class_="boundary",
            )
        )

        for index, h in enumerate(horospheres):
            if isinstance(h.centre, Finite):
                centre = complex(h.centre.z)
                if centre.imag != 0:
                    logger.warning(f"horosphere {index}: drawing centre {centre} at its real part")
                pole = to_screen(centre.real, h.size)
                dwg.add(
                    dwg.circle(
                        center=to_screen(centre.real, h.size / 2),
                        r=scale * h.size / 2,
                        fill="none",
                        stroke="black",
                        stroke_width=self.stroke_width,
                        class_="horocycle",
                    )
                )
            else:
                x_mid = (window.x_min + window.x_max) / 2
                pole = to_screen(x_mid, h.size)
                dwg.add(
                    dwg.line(
                        to_screen(window.x_min, h.size),
                        to_screen(window.x_max, h.size),
                        stroke="black",
                        stroke_width=self.stroke_width,
                        class_="horocycle-line",
                    )
                )
            self._add_arrow(dwg, pole, h.direction)
            if labels is not None:
                dwg.add(
                    dwg.text(
                        labels[index],
                        insert=(pole[0] + 4, pole[1] - 4),
                        font_size=12,
                        class_="label",
                    )
                )

        logger.debug(f"rendered {len(horospheres)} horocycles at scale {scale}")
        return dwg.tostring()

    def _add_arrow(self, dwg: svgwrite.Drawing, start: tuple[float, float], direction: complex):
        # Screen y grows downwards
        dx, dy = direction.real, -direction.imag
        tip = (start[0] + self.arrow_length * dx, start[1] + self.arrow_length * dy)
        dwg.add(
            dwg.line(
                start,
                tip,
                stroke="crimson",
                stroke_width=self.stroke_width,
                class_="decoration",
            )
        )

        head = 0.3 * self.arrow_length
        back = complex(-dx, -dy) * head
        left = back * cmath.exp(0.4j)
        right = back * cmath.exp(-0.4j)
        dwg.add(
            dwg.polygon(
                points=[
                    tip,
                    (tip[0] + left.real, tip[1] + left.imag),
                    (tip[0] + right.real, tip[1] + right.imag),
                ],
                fill="crimson",
                class_="arrowhead",
            )
        )
