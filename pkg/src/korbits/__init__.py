"""Exact-arithmetic K-orbit parameters on flag varieties of classical
symmetric pairs defined over the dyadic integers."""

__version__ = "0.1.0"
