"""Decompositions of split Kac-Moody groups realized as matrix groups."""

__version__ = "0.1.0"
