from app.src.graphs.codec import from_graph6, from_json, from_networkx, load_graph, to_dot, to_graph6, to_json
from app.src.graphs.connectivity import (
    edge_connectivity,
    is_k_connected,
    is_k_edge_connected,
    local_edge_connectivity,
    local_vertex_connectivity,
    vertex_connectivity,
)
from app.src.graphs.metrics import (
    complement_edges,
    diameter,
    distance_degrees,
    eccentricities,
    eccentricity,
    is_bipartite,
    is_connected,
    layer_decomposition,
    peripheral_vertices,
)
from app.src.graphs.models import BipartiteCheck, Graph, LayerDecomposition, build_graph

__all__ = [
    "BipartiteCheck",
    "Graph",
    "LayerDecomposition",
    "build_graph",
    "complement_edges",
    "diameter",
    "distance_degrees",
    "eccentricities",
    "eccentricity",
    "edge_connectivity",
    "from_graph6",
    "from_json",
    "from_networkx",
    "is_bipartite",
    "is_connected",
    "is_k_connected",
    "is_k_edge_connected",
    "layer_decomposition",
    "load_graph",
    "local_edge_connectivity",
    "local_vertex_connectivity",
    "peripheral_vertices",
    "to_dot",
    "to_graph6",
    "to_json",
    "vertex_connectivity",
]
