"""Siegel–Jacobi — Jacobi group arithmetic and certified theta series."""

__version__ = "0.1.0"
