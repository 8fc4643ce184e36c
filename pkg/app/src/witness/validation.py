from pydantic import BaseModel, ConfigDict

from app.core.exceptions import GraphError
from app.core.logger import get_logger
from app.src.graphs.connectivity import edge_connectivity, vertex_connectivity
from app.src.graphs.metrics import diameter, is_bipartite, is_connected
from app.src.graphs.models import Graph
from app.src.sequences.calculus import f_value
from app.src.sequences.models import ConnectivityKind, ConstraintSet, Sequence
from app.src.witness.builder import sequential_sum

logger = get_logger(__name__)


class Measurements(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: int
    diameter: int | None
    connectivity: int
    size: int | None


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: ConstraintSet
    order_ok: bool
    bipartite_ok: bool
    diameter_ok: bool
    connectivity_ok: bool
    size_ok: bool
    measured: Measurements
    expected: Measurements

    @property
    def ok(self) -> bool:
        return all((self.order_ok, self.bipartite_ok, self.diameter_ok, self.connectivity_ok, self.size_ok))


def measure(g: Graph, kind: ConnectivityKind) -> Measurements:
    connected = is_connected(g)
    if g.order < 2:
        connectivity = 0
    elif kind is ConnectivityKind.VERTEX:
        connectivity = vertex_connectivity(g)
    else:
        connectivity = edge_connectivity(g)
    return Measurements(
        order=g.order,
        diameter=diameter(g) if connected and g.order > 0 else None,
        connectivity=connectivity,
        size=g.size,
    )


def validate_graph(g: Graph, c: ConstraintSet, expected_size: int | None = None) -> ValidationReport:
    """
    Mede G e compara com os parâmetros. Falhas viram campos do relatório;
    nenhuma exceção de grafo escapa daqui.
    """
    try:
        measured = measure(g, c.kind)
    except GraphError as e:
        logger.warning(f"Falha ao medir grafo: order={g.order} erro={e}")
        measured = Measurements(order=g.order, diameter=None, connectivity=0, size=g.size)

    expected = Measurements(order=c.n, diameter=c.d, connectivity=c.level, size=expected_size)
    return ValidationReport(
        params=c,
        order_ok=measured.order == c.n,
        bipartite_ok=bool(is_bipartite(g)),
        diameter_ok=measured.diameter == c.d,
        connectivity_ok=measured.connectivity >= c.level,
        size_ok=expected_size is None or measured.size == expected_size,
        measured=measured,
        expected=expected,
    )


def validate_witness(x: Sequence, c: ConstraintSet) -> ValidationReport:
    return validate_graph(sequential_sum(x), c, expected_size=f_value(x))
