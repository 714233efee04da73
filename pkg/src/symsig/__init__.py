"""Exact engine for symmetric signatures of two-dimensional quotient singularities."""

__version__ = "0.1.0"
