"""Rendering of horocycle configurations"""

from horospinors.render.base import Renderer, Window, bounding_window
from horospinors.render.svg import SvgRenderer

__all__ = ["Renderer", "Window", "bounding_window", "SvgRenderer"]
