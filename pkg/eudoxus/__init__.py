"""Eudoxus reals: exact real arithmetic over near-endomorphisms of the integers."""

__version__ = "1.0.0"
