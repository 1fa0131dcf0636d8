"""Exact characteristic-class computations for secant varieties of the rational normal curve."""

__version__ = "0.1.0"
