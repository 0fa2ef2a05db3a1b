"""Singularities of quiver varieties over extended Dynkin quivers."""

__version__ = "0.1.0"
