"""Closed forms and high-precision evaluation of iterated log-sine integrals."""

__version__ = "0.1.0"
