"""Serialização de grafos: graph6, DOT e JSON."""
import networkx as nx
from pydantic import BaseModel, ConfigDict, ValidationError

from app.core.exceptions import GraphError, GraphFormatError
from app.src.graphs.models import Graph, build_graph

_GRAPH6_HEADER = ">>graph6<<"


class GraphDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: int
    edges: list[tuple[int, int]]


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def from_networkx(nx_graph: nx.Graph) -> Graph:
    mapping = {node: i for i, node in enumerate(sorted(nx_graph.nodes))}
    edges = [(mapping[u], mapping[v]) for u, v in nx_graph.edges]
    return build_graph(len(mapping), edges)


def from_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_GRAPH6_HEADER):
        line = line[len(_GRAPH6_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 string")
    try:
        nx_graph = nx.from_graph6_bytes(line.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphFormatError(f"invalid graph6 string {line!r}: {e}") from e
    return from_networkx(nx_graph)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    return GraphDocument(order=g.order, edges=g.edges()).model_dump_json()


def from_json(text: str) -> Graph:
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphFormatError(f"invalid graph document: {e}") from e
    try:
        return build_graph(doc.order, doc.edges)
    except GraphError as e:
        raise GraphFormatError(str(e)) from e


def load_graph(text: str) -> Graph:
    """Detecta o formato pelo conteúdo: JSON se começar com '{', senão graph6."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return from_json(stripped)
    return from_graph6(stripped.splitlines()[0] if stripped else "")
