"""Tests for the configuration manager"""

import pytest

from horospinors.config import ConfigManager, config


class TestConfigManager:
    def test_singleton(self):
        assert ConfigManager() is config

    def test_defaults(self):
        assert config.tol == 1e-9
        assert config.linear_tol == 1e-12
        assert config.degeneracy_tol == 1e-10
        assert config.infinity_tol == 1e-12
        assert config.log_level == "WARNING"
        assert config.log_file is None
        assert (config.svg_width, config.svg_height) == (800, 600)

    def test_update_skips_none(self):
        config.update(tol=1e-6, log_level=None)
        assert config.tol == 1e-6
        assert config.log_level == "WARNING"

    def test_update_rejects_unknown_names(self):
        with pytest.raises(AttributeError):
            config.update(tolerance=1e-6)

    def test_reset(self):
        config.update(tol=1e-3, svg_width=10)
        config.reset()
        assert config.tol == 1e-9
        assert config.svg_width == 800

    def test_load_file(self, tmp_path):
        path = tmp_path / "horospinors.env"
        path.write_text(
            "# overrides\n"
            "HOROSPINORS_TOL=1e-7\n"
            "HOROSPINORS_SVG_WIDTH=1024\n"
            "HOROSPINORS_LOG_LEVEL=DEBUG\n"
            "UNRELATED=1\n",
            encoding="utf-8",
        )
        applied = config.load_file(str(path))
        assert applied == {"tol": 1e-7, "svg_width": 1024, "log_level": "DEBUG"}
        assert config.tol == 1e-7
        assert config.svg_width == 1024

    def test_load_file_bad_value(self, tmp_path):
        path = tmp_path / "horospinors.env"
        path.write_text("HOROSPINORS_SVG_HEIGHT=tall\n", encoding="utf-8")
        with pytest.raises(ValueError):
            config.load_file(str(path))
        assert config.svg_height == 600
