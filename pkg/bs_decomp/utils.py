"""
Utility functions for bs-decomp.

This module provides helpers shared by the command line and the sweep:
logging setup and parsing of degree tuples.
"""

import logging
import re
import sys
from typing import Iterable, List, Tuple

from .config import EngineConfig
from .koszul import DegreeTuple, normalize

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_SEPARATORS = re.compile(r"[,\s]+")


def setup_logging(config: EngineConfig) -> None:
    """
    Configure logging from the configuration.

    Logs go to standard error so that JSON on standard output stays parsable.
    An existing root handler is kept; only the level is changed.
    """
    if not config.get("configure_logging", True):
        return
    level_name = str(config.get("log_level", "WARNING")).upper()
    log_level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(level=log_level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(log_level)


def split_integers(parts: Iterable[str]) -> List[int]:
    """
    Split comma- or whitespace-separated integer tokens.

    Raises:
        ValueError: If a token is not an integer
    """
    values = []
    for part in parts:
        for token in _SEPARATORS.split(part.strip()):
            if not token:
                continue
            try:
                values.append(int(token))
            except ValueError:
                raise ValueError(f"Not an integer: {token!r}") from None
    return values


def parse_tuple(parts: Iterable[str]) -> Tuple[DegreeTuple, bool]:
    """
    Parse a degree tuple given as "2,3,4", "2 3 4" or separate arguments.

    Returns:
        The sorted tuple and whether the input had to be reordered

    Raises:
        ValueError: If a token is not an integer
        EmptyTuple, NonPositiveDegree: If the degrees are not a valid tuple
    """
    values = split_integers(parts)
    a = normalize(values)
    reordered = list(a.degrees) != values
    if reordered:
        logger.info(f"Sorted degrees {values} to {a}")
    return a, reordered


def parse_tuple_and_next(parts: Iterable[str]) -> Tuple[DegreeTuple, int, bool]:
    """
    Parse a base tuple followed by the appended degree; the last integer is a_next.

    Raises:
        ValueError: If fewer than two integers are given
    """
    values = split_integers(parts)
    if len(values) < 2:
        raise ValueError("Expected a degree tuple followed by the appended degree")
    a, reordered = parse_tuple([",".join(str(v) for v in values[:-1])])
    return a, values[-1], reordered
