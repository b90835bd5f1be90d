import logging
import sys

from .config import Config

_configured = False
_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def get_logger(name: str) -> logging.Logger:
    """Return a logger writing bracket-tagged lines to stderr"""
    global _configured
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
        root = logging.getLogger("arithperm")
        root.addHandler(handler)
        level = Config.LOG_LEVEL if Config.LOG_LEVEL in _LEVELS else "WARNING"
        root.setLevel(level)
        root.propagate = False
        _configured = True
    return logging.getLogger(f"arithperm.{name}")


def set_level(level: str):
    """Change the toolkit log level at runtime (used by the CLI's --verbose)"""
    get_logger("cli")
    logging.getLogger("arithperm").setLevel(level.upper())
