"""Base class for horocycle renderers"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass

from horospinors.errors import EmptyWindow
from horospinors.horospheres import DecoratedHorosphereUHS, Finite


@dataclass(frozen=True)
class Window:
    """Rectangle [x_min, x_max] x [y_min, y_max] of the upper half plane"""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self):
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise EmptyWindow(
                f"window ({self.x_min}, {self.y_min}) - ({self.x_max}, {self.y_max}) has no area"
            )

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def padded(self, fraction: float) -> Window:
        dx = fraction * self.width
        dy = fraction * self.height
        return Window(self.x_min - dx, self.y_min - dy, self.x_max + dx, self.y_max + dy)


def bounding_window(horospheres: Sequence[DecoratedHorosphereUHS], padding: float) -> Window:
    """
    Bounding box of all horocycles, padded by a fraction of its size on each side.

    Circles contribute their full extent; horizontal lines only their height.

    Raises:
        EmptyWindow: If there is nothing to bound
    """
    if not horospheres:
        raise EmptyWindow("nothing to render")

    xs: list[float] = []
    top = 0.0
    for h in horospheres:
        top = max(top, h.size)
        if isinstance(h.centre, Finite):
            x = h.centre.z.real
            xs.extend([x - h.size / 2, x + h.size / 2])
    if not xs:
        xs = [-top, top]
    return Window(min(xs), 0.0, max(xs), top).padded(padding)


class Renderer(ABC):
    """Abstract base class for horocycle renderers"""

    @abstractmethod
    def render(
        self,
        horospheres: Sequence[DecoratedHorosphereUHS],
        labels: Sequence[str] | None = None,
    ) -> str:
        """
        Draw decorated horocycles in input order.

        Args:
            horospheres: Decorated horospheres with real-or-infinite centres
            labels: Optional text label per horosphere

        Returns:
            The rendered document as text
        """
        pass

    @abstractmethod
    def get_info(self) -> dict:
        """
        Get information about the renderer.

        Returns:
            Dictionary with renderer settings (format, size, window)
        """
        pass
