"""Twinless strong connectivity and cut-pair counting in linear time."""

from .graph import Digraph, GraphError, ParseError, UnGraph, parse, serialize, underlying

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "UnGraph",
    "GraphError",
    "ParseError",
    "parse",
    "serialize",
    "underlying",
]
