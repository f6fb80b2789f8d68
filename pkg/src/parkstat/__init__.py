"""Exact enumeration of legs, centers and runs for trees, parking functions and rook words."""

__version__ = "0.1.0"
