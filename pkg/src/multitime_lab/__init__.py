"""Numerical laboratory for multi-time Schroedinger equations.

Finite-dimensional tools for checking the integrability condition of partial
Hamiltonians, path dependence of multi-time evolution, Feshbach partitions,
tensor-product decompositions with interactions, and non-Hermitian spectra.
"""

__version__ = "0.1.0"
