"""Exact Laplacian matching polynomials of graphs, and a CLI that verifies them."""

__version__ = "1.0.0"
