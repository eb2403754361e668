"""
Logging configuration for the application.

Provides structured logging with:
- Environment-aware log levels
- Consistent formatting
- Output on stderr, keeping stdout free for command results
"""

import logging
import sys
from typing import Optional

from arclab.core.config import get_settings

ROOT_LOGGER_NAME = "arclab"


class StderrHandler(logging.StreamHandler):
    """Stream handler that writes to whatever sys.stderr is at emit time."""

    def __init__(self):
        logging.Handler.__init__(self)

    @property
    def stream(self):
        return sys.stderr


def setup_logging(log_level: Optional[str] = None) -> logging.Logger:
    """
    Configure and return the application logger.
    
    Calling it again only adjusts the level; handlers are attached once.
    
    Args:
        log_level: Override log level. If None, taken from settings.
        
    Returns:
        logging.Logger: Configured logger instance.
    """
    settings = get_settings()
    
    if log_level is None:
        log_level = settings.LOG_LEVEL
    if log_level is None:
        log_level = "DEBUG" if settings.is_development else "INFO"
    
    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.setLevel(getattr(logging, log_level.upper()))
    
    if not logger.handlers:
        formatter = logging.Formatter(
            fmt="%(asctime)s | %(levelname)-8s | %(name)s:%(lineno)d | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        stream_handler = StderrHandler()
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)
    
    # Prevent duplicate logs
    logger.propagate = False
    
    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a child logger with the given name.
    
    Args:
        name: Name for the logger (typically __name__).
        
    Returns:
        logging.Logger: Child logger instance.
    """
    if name.startswith(f"{ROOT_LOGGER_NAME}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
