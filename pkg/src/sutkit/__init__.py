"""Combinatorics of sutured manifolds, intersection graphs and exceptional fillings."""

__version__ = "0.1.0"
