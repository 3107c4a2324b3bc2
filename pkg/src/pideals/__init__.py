"""Exact combinatorics of primitive ideals for the infinite-rank classical types.

Subpackages cover signed-permutation Weyl groups, the row-decreasing
Robinson-Schensted correspondence, two-row symbols, Hecke algebras with
Kazhdan-Lusztig tables, Gelfand-Tsetlin branching, coherent local systems
in Zhilinskii normal form, and the (x, y, Z) classification layer.
"""

__version__ = "0.1.0"
