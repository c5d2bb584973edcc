"""Combinatorial invariants of binomial edge ideals, with a homological oracle."""

from .classes import classify, recognize_cameron_walker
from .constructions import build_named, depth_target, minimal_dense_cw
from .depth import cm_classify_cw, depth_bounds, depth_dispatch
from .graph import Graph, GraphError, graph_invariants, validate_graph
from .kernels import BACKEND
from .oracle import hochster_depth_dim
from .primes import is_unmixed, krull_dim, minimal_primes

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Graph", "GraphError", "build_named", "classify", "cm_classify_cw",
    "depth_bounds", "depth_dispatch", "depth_target", "graph_invariants", "hochster_depth_dim",
    "is_unmixed", "krull_dim", "minimal_dense_cw", "minimal_primes", "recognize_cameron_walker",
    "validate_graph",
]
