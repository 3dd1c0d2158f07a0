"""Explicit Verschiebung maps between Kummer surfaces of genus-2 Jacobians in odd characteristic."""

__version__ = "0.1.0"
