"""Exact computations for Hamiltonian Lie pseudoalgebras over U(d)."""

__version__ = "0.1.0"
