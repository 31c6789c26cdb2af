"""Exact spanning-tree counting and extremal verification for small graphs."""
from .graph import ClassSpec, ConnKind, Graph, make_graph
from .spanning import WeightedGraph, tau, tau_oracle, tau_weighted

__all__ = ["ClassSpec", "ConnKind", "Graph", "WeightedGraph", "make_graph", "tau", "tau_oracle",
           "tau_weighted"]
__version__ = "0.1.0"
