"""Combinatorial spatial graph diagrams, theta-curve constructions and
crossing-number bounds."""

__version__ = "0.1.0"
