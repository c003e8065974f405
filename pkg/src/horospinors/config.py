"""Configuration module for horospinors - Singleton pattern"""

from __future__ import annotations

from dotenv import dotenv_values


class ConfigManager:
    """
    Singleton configuration manager for the library and CLI.
    Holds numerical tolerances, logging and rendering settings.

    Values start at built-in defaults. They can be overridden from a dotenv-style
    file named by the user (see `load_file`) or programmatically via `update`.
    The process environment is never consulted.
    """

    _instance: "ConfigManager | None" = None
    _initialized: bool = False

    _FILE_KEYS: dict[str, tuple[str, type]] = {
        "HOROSPINORS_TOL": ("tol", float),
        "HOROSPINORS_LINEAR_TOL": ("linear_tol", float),
        "HOROSPINORS_DEGENERACY_TOL": ("degeneracy_tol", float),
        "HOROSPINORS_INFINITY_TOL": ("infinity_tol", float),
        "HOROSPINORS_KERNEL_TOL": ("kernel_tol", float),
        "HOROSPINORS_LOG_LEVEL": ("log_level", str),
        "HOROSPINORS_LOG_FILE": ("log_file", str),
        "HOROSPINORS_SVG_WIDTH": ("svg_width", int),
        "HOROSPINORS_SVG_HEIGHT": ("svg_height", int),
        "HOROSPINORS_SVG_PADDING": ("svg_padding", float),
        "HOROSPINORS_SVG_STROKE_WIDTH": ("svg_stroke_width", float),
        "HOROSPINORS_SVG_ARROW_FRACTION": ("svg_arrow_fraction", float),
    }

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if ConfigManager._initialized:
            return

        self.reset()

        ConfigManager._initialized = True

    def reset(self) -> None:
        """Restore every setting to its built-in default"""
        self._init_tolerance_config()
        self._init_logging_config()
        self._init_render_config()

    def _init_tolerance_config(self):
        """Initialize numerical tolerances"""
        # Identity checks on low-degree polynomial formulas
        self.tol = 1e-9
        # Exactly-linear maps (Hermitian <-> Minkowski)
        self.linear_tol = 1e-12
        # |bracket| <= degeneracy_tol * |k1| * |k2| counts as a common centre
        self.degeneracy_tol = 1e-10
        # eta counts as zero when |eta| <= infinity_tol * |xi|
        self.infinity_tol = 1e-12
        # Singular values below kernel_tol * largest are treated as zero
        self.kernel_tol = 1e-9

    def _init_logging_config(self):
        """Initialize logging configuration"""
        self.log_level = "WARNING"
        # Only written when the user names a file
        self.log_file: str | None = None

    def _init_render_config(self):
        """Initialize SVG rendering defaults"""
        self.svg_width = 800
        self.svg_height = 600
        self.svg_padding = 0.10
        self.svg_stroke_width = 1.0
        # Decoration arrow length as a fraction of the smaller window side
        self.svg_arrow_fraction = 0.06

    def update(self, **overrides) -> None:
        """
        Override individual settings.

        Args:
            **overrides: Setting names and values; None values are ignored

        Raises:
            AttributeError: If a setting name is unknown
        """
        for name, value in overrides.items():
            if value is None:
                continue
            if not hasattr(self, name):
                raise AttributeError(f"Unknown configuration setting: {name}")
            setattr(self, name, value)

    def load_file(self, path: str) -> dict[str, object]:
        """
        Load overrides from a dotenv-style file.

        Args:
            path: Path to a file of KEY=value lines (HOROSPINORS_* keys)

        Returns:
            Dictionary of the settings that were applied
        """
        applied: dict[str, object] = {}
        for key, raw in dotenv_values(path).items():
            if key not in self._FILE_KEYS or raw is None:
                continue
            name, cast = self._FILE_KEYS[key]
            applied[name] = cast(raw)
        self.update(**applied)
        return applied


# Global instance
config = ConfigManager()
