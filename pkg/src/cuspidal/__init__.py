"""Discriminant geometry of deformed degree-4 covers and the 3-cuspidal quartic."""

__version__ = "0.1.0"
