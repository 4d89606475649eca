"""Exhaustive enumeration and verification of simple n-Venn diagrams.

A simple n-Venn diagram is determined by its dual graph: a spanning plane
quadrangulation of the n-cube whose halfspace-induced subgraphs are all
connected.  This package enumerates those quadrangulations by splitting them
along one curve into two halves over a common boundary cycle, analyzes the
resulting census (matchings, Hamilton cycles, monotonicity, ...), and builds
the two explicit counterexample families: ladder-extended quadrangulations
without perfect matchings, and the non-simple wire diagrams D_n / D_n*.
"""

from vennquad.errors import VennError

__all__ = ["VennError"]
__version__ = "0.1.0"
