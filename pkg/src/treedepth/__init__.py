"""Exact tree-depth of small graphs."""

from .forest import RootedTree, assemble, closure, embeds, level_sequence, prec
from .full import SolveResult, SolverConfig, solve, treedepth
from .graph import Graph, components, generate, is_connected, neighborhood, parse_graph
from .naive import CapExceeded, td_naive
from .states import Epsilon, enumerate_states

__all__ = [
    "CapExceeded",
    "Epsilon",
    "Graph",
    "RootedTree",
    "SolveResult",
    "SolverConfig",
    "assemble",
    "closure",
    "components",
    "embeds",
    "enumerate_states",
    "generate",
    "is_connected",
    "level_sequence",
    "neighborhood",
    "parse_graph",
    "prec",
    "solve",
    "td_naive",
    "treedepth",
]
