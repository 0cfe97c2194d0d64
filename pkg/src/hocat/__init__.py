"""Finite-category engine for localizations, homotopy categories and derived functors."""

__version__ = "0.1.0"
