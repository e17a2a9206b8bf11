"""Computational noncommutative graded invariant theory."""

__version__ = "0.1.0"
