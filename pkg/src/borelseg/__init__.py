"""Combinatorics of Borel ideals: segments, enumeration by Hilbert polynomial, Groebner strata."""

__version__ = "0.1.0"
