"""Hilbert coefficients, Gotzmann decompositions and Castelnuovo-Mumford
regularity bounds for standard graded quotients of polynomial rings."""

__version__ = "0.1.0"
