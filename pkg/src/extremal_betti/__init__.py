"""Extremal graded Betti numbers of weighted-hyperplane monomial ideals.

Two engines: closed-form tables driven by graph invariants of the weight
graph (``dispatch``), and a local-cohomology oracle built on degree
complexes (``extremal_report_oracle``).
"""

from .closed_form import B1, B2, DispatchGap, dispatch, pseudo_gorenstein, pseudo_gorenstein_clauses
from .graph import SimpleGraph, girth, new_graph
from .instance import Instance, UnsupportedInstance
from .invariants import InvariantBundle, classify_pair, compute_invariants, PairClass
from .lattice import sol1_brute, sol1_closed, sol2_brute, sol2_closed
from .oracle import extremal_report_oracle, local_cohomology_dim, profile
from .report import Corner, ExtremalReport

__all__ = [
    "B1", "B2", "Corner", "DispatchGap", "ExtremalReport", "Instance", "InvariantBundle",
    "PairClass", "SimpleGraph", "UnsupportedInstance", "classify_pair", "compute_invariants",
    "dispatch", "extremal_report_oracle", "girth", "local_cohomology_dim", "new_graph",
    "profile", "pseudo_gorenstein", "pseudo_gorenstein_clauses", "sol1_brute", "sol1_closed",
    "sol2_brute", "sol2_closed",
]
