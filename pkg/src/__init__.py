"""Planes on split cubic fourfolds and certificates for their lattices."""

__version__ = "0.1.0"
