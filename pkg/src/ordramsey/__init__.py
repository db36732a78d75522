"""Ordered, cyclic and permutational Ramsey numbers of small ordered graphs.

SAT search gives exact values; an independent bitmask embedding counter
verifies every witness.  Compiled kernels are used when built, with
pure-Python twins as the fallback (see ``ordramsey._backend``).
"""

__version__ = "0.1.0"

from .coloring import Coloring
from .constructions import (
    CirculantSpec,
    block_coloring,
    block_coloring_cyclic,
    circulant_coloring,
    largest_nested_matching_circulant,
    nested_matching_ordered_coloring,
)
from .embeddings import CYCLIC, ORDERED, EmbedMode, count_embeddings, has_forbidden, is_witness, score
from .graphs import OrderedGraph, graph6_decode, graph6_encode, make_class, parse_graph, rotate
from .groups import PermGroup, closure, group_make, orbit
from .cnf import CnfInstance, encode, parse_model, var_id, write_dimacs
from .heuristic import CeParams, ce_search
from .search import RamseyProblem, RamseyResult, ResultsCache, ramsey_number
from .solvers import SolveOutcome, solve, solve_embedded, solve_external
