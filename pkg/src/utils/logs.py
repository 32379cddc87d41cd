from __future__ import annotations

import logging

from colorama import Fore, Style

import config as cfg

__all__ = ("ColorFormatter", "setup_logging", "teardown_logging")


class ColorFormatter(logging.Formatter):
    COLORS = {
        logging.DEBUG: Fore.CYAN,
        logging.INFO: Fore.GREEN,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.MAGENTA + Style.BRIGHT,
    }

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        color = self.COLORS.get(record.levelno)
        return f"{color}{text}{Style.RESET_ALL}" if color else text


def setup_logging(level: str | int | None = None, *, color: bool = True) -> logging.Logger:
    root = logging.getLogger()
    root.setLevel(level or cfg.LOG_LEVEL)

    teardown_logging()

    handler = logging.StreamHandler()
    handler._geolocal = True
    handler.setFormatter(ColorFormatter(cfg.LOG_FORMAT) if color else logging.Formatter(cfg.LOG_FORMAT))
    root.addHandler(handler)
    return root


def teardown_logging() -> None:
    """Drops the handler `setup_logging` installed; its stream may not outlive one cli invocation."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_geolocal", False):
            root.removeHandler(handler)
