"""Exact symmetric functions and combinatorics of shifted parking functions."""

__version__ = "0.1.0"
