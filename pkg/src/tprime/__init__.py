"""Exact computations with truncated ideals of the infinite symmetric group algebra."""

__version__ = "0.1.0"
