"""Exact-arithmetic workbench for associators and double shuffle relations."""

__version__ = "0.1.0"
