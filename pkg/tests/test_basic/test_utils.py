"""
Tests for argument parsing and logging setup.
"""

import logging

import pytest

from bs_decomp.config import EngineConfig
from bs_decomp.errors import NonPositiveDegree
from bs_decomp.koszul import DegreeTuple
from bs_decomp.utils import parse_tuple, parse_tuple_and_next, setup_logging, split_integers


def test_split_integers():
    """Commas and whitespace both separate degrees."""
    assert split_integers(["2,3,4"]) == [2, 3, 4]
    assert split_integers(["2 3 4"]) == [2, 3, 4]
    assert split_integers(["2", "3,", "4"]) == [2, 3, 4]
    with pytest.raises(ValueError):
        split_integers(["2,x"])


def test_parse_tuple_sorts():
    """Unsorted input is sorted and reported."""
    assert parse_tuple(["2,3,4"]) == (DegreeTuple((2, 3, 4)), False)
    assert parse_tuple(["4 2 3"]) == (DegreeTuple((2, 3, 4)), True)
    with pytest.raises(NonPositiveDegree):
        parse_tuple(["0,2"])


def test_parse_tuple_and_next():
    """The last integer is the appended degree."""
    assert parse_tuple_and_next(["2,3,4", "13"]) == (DegreeTuple((2, 3, 4)), 13, False)
    assert parse_tuple_and_next(["2 3 4 13"]) == (DegreeTuple((2, 3, 4)), 13, False)
    with pytest.raises(ValueError):
        parse_tuple_and_next(["5"])


def test_setup_logging_sets_level():
    """The configured level reaches the root logger."""
    root = logging.getLogger()
    previous = root.level
    try:
        setup_logging(EngineConfig({"log_level": "debug"}))
        assert root.level == logging.DEBUG
        setup_logging(EngineConfig({"log_level": "INFO", "configure_logging": False}))
        assert root.level == logging.DEBUG
    finally:
        root.setLevel(previous)
