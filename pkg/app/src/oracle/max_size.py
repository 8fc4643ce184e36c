"""
Tamanho máximo por força bruta sobre grafos bipartidos conexos.

Para cada tamanho de lado (a, b) basta uma bipartição representante: todo
grafo com esses lados é isomorfo a um subgrafo de K_{a,b} com A = 0..a-1.
Partindo de K_{a,b}, removemos r arestas para r crescente e paramos no
primeiro r com algum grafo da classe. O piso de tamanho vem de um membro
da classe efetivamente medido (G do ótimo de sequências), nunca do limite
teórico.
"""
import time
from itertools import combinations
from math import ceil
from multiprocessing import Pool

import networkx as nx
from pydantic import BaseModel, ConfigDict

from app.config.settings import settings
from app.core.logger import get_logger
from app.services.cache_service import ResultCache, cache_key
from app.src.graphs.codec import from_graph6, to_graph6
from app.src.graphs.models import build_graph
from app.src.oracle import bitsets
from app.src.oracle.enumeration import GraphFilter, check_ceiling
from app.src.optimizer import dp_optimum, enumerate_sequences, is_class_feasible
from app.src.sequences.models import ConstraintSet
from app.src.witness import validate_witness

logger = get_logger(__name__)


class OracleResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: ConstraintSet
    feasible: bool
    max_size: int | None = None
    witness_count: int = 0
    witnesses: list[str] = []
    graphs_scanned: int = 0


def _relaxed_feasible(c: ConstraintSet) -> bool:
    # X(u) de um vértice periférico satisfaz as regras locais com a última entrada livre
    return next(enumerate_sequences(c, relax_last=True), None) is not None


def _member_floor(c: ConstraintSet) -> int:
    if not is_class_feasible(c):
        return 0
    report = validate_witness(dp_optimum(c).best, c)
    if report.ok:
        return report.measured.size
    return 0


def _scan_sides(job: tuple[ConstraintSet, int, int]) -> tuple[int | None, list[tuple[tuple[int, int], ...]], int]:
    c, a, floor = job
    order = c.n
    full = (1 << order) - 1
    graph_filter = GraphFilter.from_constraints(c)
    edges = [(u, v) for u in range(a) for v in range(a, order)]
    complete = [0] * order
    for u, v in edges:
        complete[u] |= 1 << v
        complete[v] |= 1 << u

    scanned = 0
    for removed_count in range(0, len(edges) - floor + 1):
        hits = []
        for removed in combinations(range(len(edges)), removed_count):
            scanned += 1
            adj = complete[:]
            for index in removed:
                u, v = edges[index]
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            if not graph_filter.admits_masks(adj):
                continue
            if bitsets.diameter(adj, full, c.d) != c.d:
                continue
            g = build_graph(order, bitsets.edges_of(adj))
            if graph_filter.accepts(g):
                hits.append(tuple(g.edges()))
        if hits:
            return len(edges) - removed_count, hits, scanned
    return None, [], scanned


def _distinct_up_to_isomorphism(codes: list[str]) -> list[str]:
    kept: list[tuple[str, nx.Graph, str]] = []
    for code in sorted(set(codes)):
        candidate = from_graph6(code).to_networkx()
        fingerprint = nx.weisfeiler_lehman_graph_hash(candidate)
        if any(fp == fingerprint and nx.is_isomorphic(candidate, other) for _, other, fp in kept):
            continue
        kept.append((code, candidate, fingerprint))
    return [code for code, _, _ in kept]


def oracle_max_size(c: ConstraintSet, jobs: int | None = None, cache: ResultCache | None = None) -> OracleResult:
    check_ceiling(c.n)
    key = cache_key(c.kind.value, c.level, c.n, c.d)
    if cache is not None:
        cached = cache.get(key)
        if cached is not None:
            logger.info(f"Resultado do oráculo vindo do cache: key={key}")
            return OracleResult.model_validate(cached)

    jobs = jobs or settings.ORACLE_JOBS
    started = time.perf_counter()

    if not _relaxed_feasible(c):
        logger.info(f"Classe vazia pelas regras locais: {c.label()}")
        result = OracleResult(params=c, feasible=False)
    else:
        floor = max(_member_floor(c), c.n - 1, ceil(c.n * c.level / 2))
        sides = [(c, a, floor) for a in range(1, c.n // 2 + 1) if min(a, c.n - a) >= c.level]
        logger.debug(f"Oráculo {c.label()}: lados={[a for _, a, _ in sides]} piso={floor} jobs={jobs}")

        if jobs > 1 and len(sides) > 1:
            with Pool(processes=jobs) as pool:
                partial = pool.map(_scan_sides, sides)
        else:
            partial = [_scan_sides(job) for job in sides]

        scanned = sum(p[2] for p in partial)
        sizes = [p[0] for p in partial if p[0] is not None]
        if not sizes:
            result = OracleResult(params=c, feasible=False, graphs_scanned=scanned)
        else:
            best = max(sizes)
            codes = [to_graph6(build_graph(c.n, edges)) for size, hits, _ in partial if size == best for edges in hits]
            witnesses = _distinct_up_to_isomorphism(codes)
            result = OracleResult(
                params=c,
                feasible=True,
                max_size=best,
                witness_count=len(witnesses),
                witnesses=witnesses,
                graphs_scanned=scanned,
            )

    logger.info(
        f"Oráculo {c.label()}: max={result.max_size} testemunhas={result.witness_count} "
        f"varridos={result.graphs_scanned} elapsed={time.perf_counter() - started:.2f}s"
    )
    if cache is not None:
        cache.put(key, result.model_dump(mode="json"))
    return result
