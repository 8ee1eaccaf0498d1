"""Legendre functions of complex degree, complete elliptic integrals and singular quadrature."""

__version__ = "0.1.0"
