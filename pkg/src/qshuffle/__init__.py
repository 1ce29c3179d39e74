"""Exact shuffle-algebra computations for quantum loop algebras.

The package computes Hopf pairings by iterated residues, wheel-condition
membership in the small shuffle algebra, l-weight-space dimensions of
simple modules in the Borel and shifted categories O, q-characters,
normalization characters, and verifies the QQ-system, all over the exact
field Q(q, a_1, ..., a_m).
"""

__version__ = "0.1.0"
