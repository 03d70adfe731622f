"""Conjugacy algorithms for Garside groups: braid monoids B_n+ and BKL_n+."""

__version__ = "0.3.0"
