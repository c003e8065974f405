"""
Centralized logging configuration for horospinors
Uses Rich library for terminal output on stderr
A plain log file is written only when the user names one
"""

import logging

from rich.console import Console
from rich.logging import RichHandler

from horospinors.config import config


class LoggerManager:
    """
    Singleton logger manager with Rich formatting
    """

    _instance: "LoggerManager | None" = None
    _initialized: bool = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if LoggerManager._initialized:
            return

        # stdout is reserved for command output (JSON, CSV, SVG)
        self.console = Console(stderr=True)
        self._file_handler: logging.FileHandler | None = None
        self.logger = self._setup_logger(level=config.log_level)
        LoggerManager._initialized = True

    def _setup_logger(self, name: str = "horospinors", level: str = "WARNING") -> logging.Logger:
        """
        Setup a logger with a Rich console handler

        Args:
            name: Logger name
            level: Logging level name (default: WARNING)

        Returns:
            Configured logger instance
        """
        logger = logging.getLogger(name)

        # Only configure if not already configured
        if not logger.handlers:
            logger.setLevel(level)

            console_handler = RichHandler(
                console=self.console,
                rich_tracebacks=True,
                show_path=False,
                markup=False,
            )
            logger.addHandler(console_handler)
            logger.propagate = False

        return logger

    def set_level(self, level: str) -> None:
        """Change the level of the logger and all of its handlers"""
        self.logger.setLevel(level.upper())
        for handler in self.logger.handlers:
            handler.setLevel(level.upper())

    def detach_file(self) -> None:
        """Stop writing to the log file, if any"""
        if self._file_handler is not None:
            self.logger.removeHandler(self._file_handler)
            self._file_handler.close()
            self._file_handler = None

    def attach_file(self, log_file: str) -> None:
        """
        Also write plain-format log records to a file

        Args:
            log_file: Path of the log file (appended to)
        """
        self.detach_file()

        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(self.logger.level)
        file_handler.setFormatter(
            logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        self.logger.addHandler(file_handler)
        self._file_handler = file_handler
        self.logger.info(f"Logging to file: {log_file}")

    def info(self, message: str):
        """Log info message"""
        self.logger.info(message)

    def error(self, message: str, exc_info: bool = False):
        """Log error message"""
        self.logger.error(message, exc_info=exc_info)

    def warning(self, message: str):
        """Log warning message"""
        self.logger.warning(message)

    def debug(self, message: str):
        """Log debug message"""
        self.logger.debug(message)


# Global logger instance
logger = LoggerManager()
