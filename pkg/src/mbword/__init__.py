"""Decide whether free-group words are multiplicity-bounding."""

__version__ = "0.1.0"
