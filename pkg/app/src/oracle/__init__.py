from app.src.oracle.enumeration import GraphFilter, enumerate_connected_bipartite
from app.src.oracle.max_size import OracleResult, oracle_max_size
from app.src.oracle.random_graphs import random_constrained_graph

__all__ = [
    "GraphFilter",
    "OracleResult",
    "enumerate_connected_bipartite",
    "oracle_max_size",
    "random_constrained_graph",
]
