"""
valencelab
==========
Extremal examples for the valence of logharmonic polynomials

valencelab builds real polynomials with fixed critical points, perturbs them
into rational maps c + 1/p(z) with n attracting fixed points, and counts the
3n - 1 solutions of conj(c) + 1/conj(p(z)) = z, checking the count with the
argument principle. For documentation, look at the docstrings.
"""
__version__ = "0.1.0"
