"""
Environment configuration.

Values are read from the process environment, optionally seeded from a
``.env`` file in the working directory.
"""
import logging
import os

from dotenv import find_dotenv, load_dotenv

DEFAULT_SEARCH_LIMIT = 2_000_000
DEFAULT_LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def load_environment() -> None:
    """Load ``.env`` without overriding variables that are already set."""
    load_dotenv(find_dotenv(usecwd=True), override=False)


def get_search_limit() -> int:
    """Node cap for the exhaustive searches (``FAMCAKE_SEARCH_LIMIT``)."""
    raw = os.environ.get("FAMCAKE_SEARCH_LIMIT")
    if raw is None or raw.strip() == "":
        return DEFAULT_SEARCH_LIMIT
    try:
        limit = int(raw)
    except ValueError:
        raise ValueError(f"FAMCAKE_SEARCH_LIMIT must be an integer, got {raw!r}")
    if limit < 1:
        raise ValueError(f"FAMCAKE_SEARCH_LIMIT must be positive, got {limit}")
    return limit


def get_log_level(verbose: bool = False) -> int:
    """DEBUG when verbose, else ``FAMCAKE_LOG_LEVEL`` (default WARNING)."""
    if verbose:
        return logging.DEBUG
    name = os.environ.get("FAMCAKE_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ValueError(f"FAMCAKE_LOG_LEVEL is not a logging level: {name!r}")
    return level


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(level=get_log_level(verbose), format=LOG_FORMAT)
