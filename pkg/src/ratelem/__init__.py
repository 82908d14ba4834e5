"""Exact eigenvalue-1 analysis for rational odd-order semisimple elements."""

__version__ = "0.1.0"
