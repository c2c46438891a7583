"""Exact computations in the algebra K<x, y | x^2 + ax + b = 0, y^2 + cy + d = 0>
and its embedding into 2x2 matrices over a polynomial ring."""

__version__ = "0.1.0"
