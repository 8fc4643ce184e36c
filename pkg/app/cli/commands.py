import sys
import time
from functools import wraps
from pathlib import Path

import click

from app.cli import render
from app.config.settings import settings
from app.core.exceptions import ExtremalError
from app.core.logger import get_logger
from app.services.cache_service import NullCache, get_cache
from app.src.extremal import (
    DiscrepancyTable,
    bound_grid,
    bound_report,
    constraint_set,
    construction,
    discrepancy_csv,
    discrepancy_row,
)
from app.src.graphs.codec import load_graph, to_dot, to_graph6, to_json
from app.src.oracle import oracle_max_size, random_constrained_graph
from app.src.witness import sequential_sum, validate_graph

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_DISAGREEMENT = 2


def _parse_range(ctx, param, value: str) -> range:
    try:
        low, high = (int(part) for part in value.split(".."))
    except ValueError:
        raise click.BadParameter(f"expected A..B, got {value!r}")
    if low > high:
        raise click.BadParameter(f"empty range {value!r}")
    return range(low, high + 1)


def _kind_option(f):
    return click.option("--kind", type=click.Choice(["kappa", "lambda"]), required=True)(f)


def _params_options(f):
    f = click.option("--level", type=int, required=True, help="κ ou λ exigido")(f)
    f = click.option("--d", "diameter", type=int, required=True)(f)
    f = click.option("--n", "order", type=int, required=True)(f)
    return _kind_option(f)


def domain_errors(command):
    """Erros do domínio viram mensagem em stderr e exit 1."""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ExtremalError as e:
            logger.error(f"{command.__name__} falhou: {e}")
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_INFEASIBLE)
    return wrapper


class ExtremalGroup(click.Group):
    """Erros de uso saem com 1; o 2 fica reservado para divergências."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_INFEASIBLE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_INFEASIBLE
            raise


@click.group(cls=ExtremalGroup)
def cli():
    """Limites de tamanho para grafos bipartidos com diâmetro e conectividade fixos."""


@cli.command()
@_params_options
@click.option("--json", "as_json", is_flag=True)
@domain_errors
def bound(kind, order, diameter, level, as_json):
    report = bound_report(constraint_set(kind, order, diameter, level))
    click.echo(render.as_json(report) if as_json else render.bound_text(report))


@cli.command()
@_params_options
@click.option("--out", "fmt", type=click.Choice(["g6", "dot", "json"]), default="g6", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--perturb", is_flag=True, help="Apaga arestas aleatórias mantendo a classe")
@click.option("--seed", type=int, default=None)
@domain_errors
def construct(kind, order, diameter, level, fmt, output, perturb, seed):
    c = constraint_set(kind, order, diameter, level)
    if perturb:
        g = random_constrained_graph(c, seed=settings.RANDOM_SEED if seed is None else seed)
    else:
        g = sequential_sum(construction(c).sequence)

    if fmt == "dot":
        text = to_dot(g)
    elif fmt == "json":
        text = to_json(g) + "\n"
    else:
        text = to_graph6(g) + "\n"

    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        logger.info(f"Testemunha gravada: path={output} formato={fmt} m={g.size}")


@cli.command()
@click.option("--in", "source", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@_kind_option
@click.option("--level", type=int, required=True)
@click.option("--d", "diameter", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
@domain_errors
def verify(source, kind, level, diameter, as_json):
    g = load_graph(source.read_text(encoding="utf-8"))
    c = constraint_set(kind, g.order, diameter, level)
    try:
        expected = bound_report(c).bound
    except ExtremalError as e:
        logger.warning(f"Sem limite para comparar tamanho: {e}")
        expected = None

    report = validate_graph(g, c, expected_size=expected)
    click.echo(render.as_json(report) if as_json else render.validation_text(report))
    if not report.ok:
        sys.exit(EXIT_INFEASIBLE)


@cli.command()
@_params_options
@click.option("--jobs", type=int, default=None)
@click.option("--cache", "cache_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--no-cache", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@domain_errors
def oracle(kind, order, diameter, level, jobs, cache_path, no_cache, as_json):
    c = constraint_set(kind, order, diameter, level)
    cache = NullCache() if no_cache else get_cache(cache_path)
    result = oracle_max_size(c, jobs=jobs, cache=cache)
    click.echo(render.as_json(result) if as_json else render.oracle_text(result))
    if not result.feasible:
        sys.exit(EXIT_INFEASIBLE)


@cli.command()
@_kind_option
@click.option("--level", type=int, required=True)
@click.option("--n-range", "orders", required=True, callback=_parse_range)
@click.option("--d-range", "diameters", required=True, callback=_parse_range)
@click.option("--oracle/--no-oracle", "run_oracle", default=True, show_default=True)
@click.option("--jobs", type=int, default=None)
@click.option("--cache", "cache_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--no-cache", is_flag=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--json", "as_json", is_flag=True)
@domain_errors
def compare(kind, level, orders, diameters, run_oracle, jobs, cache_path, no_cache, csv_path, as_json):
    started = time.perf_counter()
    cache = NullCache() if no_cache else get_cache(cache_path)

    rows = []
    for report in bound_grid(kind, level, orders, diameters):
        c = report.params
        if run_oracle and report.feasible and c.n <= settings.ORACLE_MAX_ORDER:
            result = oracle_max_size(c, jobs=jobs, cache=cache)
            rows.append(discrepancy_row(report, result.max_size, oracle_run=True))
        else:
            rows.append(discrepancy_row(report))

    table = DiscrepancyTable(rows=rows)
    click.echo(render.as_json(table) if as_json else render.table_text(rows))
    if csv_path is not None:
        csv_path.write_text(discrepancy_csv(rows), encoding="utf-8")

    logger.info(f"Comparação: pontos={len(rows)} sinalizados={len(table.flagged)} elapsed={time.perf_counter() - started:.2f}s")
    if table.flagged:
        sys.exit(EXIT_DISAGREEMENT)
