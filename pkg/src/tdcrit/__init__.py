"""Total-domination vertex-critical graphs: exact solvers, explicit families,
criticality checks and exhaustive search."""

from .criticality import CriticalityReport, cycle_criticality_profile, is_k_gamma_t_critical
from .domination import gamma, gamma_t, is_dominating, is_total_dominating
from .families import build_cycle, build_g4m, build_g4m2, witness_g4m, witness_g4m2
from .graph import Graph, decode_graph6, delete_vertex, encode_graph6, from_edges, new_graph

__all__ = [
    "CriticalityReport", "Graph", "build_cycle", "build_g4m", "build_g4m2",
    "cycle_criticality_profile", "decode_graph6", "delete_vertex", "encode_graph6",
    "from_edges", "gamma", "gamma_t", "is_dominating", "is_k_gamma_t_critical",
    "is_total_dominating", "new_graph", "witness_g4m", "witness_g4m2",
]
