"""Exact and Monte Carlo tools for representations of symmetric groups,
spin characters and supercharacters of unitriangular groups."""

__version__ = "0.1.0"
