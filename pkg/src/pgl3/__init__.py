"""Exact cluster coordinates for convex projective structures."""

__version__ = "0.1.0"
