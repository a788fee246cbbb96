"""Symmetric quandles: finite tables, presentations, diagrams and colorings."""

__version__ = "0.1.0"
