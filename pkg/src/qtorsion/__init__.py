"""Torsion of rational elliptic curves over quartic number fields."""

__version__ = "0.1.0"
