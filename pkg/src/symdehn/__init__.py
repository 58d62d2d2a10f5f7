"""Exact Dehn invariants of the symmetric pyramids P_n(h), n in {3, 4, 6}."""

__version__ = "0.1.0"
