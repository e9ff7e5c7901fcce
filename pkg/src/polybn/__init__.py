"""Lattice polygons, toric curves and Brill-Noether arithmetic."""

__version__ = "0.1.0"
