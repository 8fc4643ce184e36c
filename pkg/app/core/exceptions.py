"""Hierarquia de erros do domínio.

Tudo deriva de ExtremalError para que a CLI consiga separar falhas do
domínio (mensagem + exit 1) de erros inesperados.
"""


class ExtremalError(Exception):
    """Base de todos os erros do pacote."""


# --- Grafos ---

class GraphError(ExtremalError):
    pass


class InvalidVertexError(GraphError):
    def __init__(self, vertex: int, order: int):
        super().__init__(f"vertex {vertex} outside 0..{order - 1}")
        self.vertex = vertex
        self.order = order


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class DisconnectedGraphError(GraphError):
    def __init__(self, source: int, unreachable: int):
        super().__init__(f"graph is disconnected: {unreachable} vertices unreachable from {source}")
        self.source = source
        self.unreachable = unreachable


class NotBipartiteError(GraphError):
    pass


class GraphOrderError(GraphError):
    pass


class GraphFormatError(GraphError):
    pass


# --- Sequências ---

class SequenceError(ExtremalError):
    pass


class MoveError(SequenceError):
    pass


# --- Parâmetros / buscas ---

class InfeasibleParametersError(ExtremalError):
    def __init__(self, message: str, **params):
        super().__init__(message)
        self.params = params


class OracleCeilingError(ExtremalError):
    def __init__(self, order: int, ceiling: int):
        super().__init__(f"order {order} above oracle ceiling {ceiling}")
        self.order = order
        self.ceiling = ceiling


class GenerationBudgetError(ExtremalError):
    def __init__(self, attempts: int):
        super().__init__(f"no constrained graph produced after {attempts} attempts")
        self.attempts = attempts


class CacheUnavailableError(ExtremalError):
    pass
