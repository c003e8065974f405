"""horospinors - spinors, spin-decorated horospheres and complex lambda lengths."""

__version__ = "0.1.0"

__all__ = ["__version__"]
