"""
tutte eval / classical
"""
import json

import click

from commands import MODES, pass_config
from components.report import emit, header, result_line
from components.serializers import graph_from_json, graph_to_json
from services.scalars import ScalarMode, parse_scalar, scalar_to_json
from services.tutte import (
    PottsPoint,
    grid_graph,
    tutte_classical,
    tutte_grid,
    z_delcon,
    z_subset,
    z_transfer,
)

ENGINES = click.Choice(["subset", "delcon", "transfer"])


@click.group("tutte")
def tutte():
    """Multivariate and classical Tutte polynomials."""


@tutte.command("eval")
@click.option("--graph", type=click.File("r", encoding="utf-8"), default=None, help="Graph JSON.")
@click.option("--grid", type=(click.IntRange(min=1), click.IntRange(min=1)), default=None,
              help="Use the m x n grid graph instead of a file.")
@click.option("--v", "v_raw", default="1", show_default=True, help="Uniform edge weight for --grid.")
@click.option("--Q", "q_raw", required=True)
@click.option("--engine", type=ENGINES, default="delcon", show_default=True)
@click.option("--mode", type=MODES, default="exact", show_default=True)
@pass_config
def eval_cmd(cfg, graph, grid, v_raw, q_raw, engine, mode):
    """Z_G(Q, v) by the chosen engine."""
    if (graph is None) == (grid is None):
        raise click.UsageError("give exactly one of --graph and --grid")
    if engine == "transfer" and grid is None:
        raise click.UsageError("the transfer engine needs --grid")
    Q = parse_scalar(q_raw, mode)
    if grid is not None:
        g = grid_graph(*grid, parse_scalar(v_raw, mode))
    else:
        g = graph_from_json(json.load(graph), ScalarMode(mode))
    p = PottsPoint(Q)
    if engine == "subset":
        z = z_subset(g, p, max_edges=cfg.max_subset_edges)
    elif engine == "delcon":
        z = z_delcon(g, p)
    else:
        z = z_transfer(*grid, PottsPoint(Q, tuple(e.weight for e in g.edges)), max_width=cfg.max_strip_width)
    lines = [header(f"Z_G on {g.vertex_count} vertices, {len(g.edges)} edges", f"engine {engine}"),
             result_line("Z", z)]
    emit(cfg, "tutte eval", {"graph": graph_to_json(g), "Q": scalar_to_json(Q), "mode": mode},
         {"Z": scalar_to_json(z)}, lines, engine=engine)


@tutte.command("classical")
@click.option("--grid", type=(click.IntRange(min=1), click.IntRange(min=1)), required=True)
@click.option("--x", "x_raw", default="3", show_default=True)
@click.option("--y", "y_raw", default="3", show_default=True)
@click.option("--engine", type=ENGINES, default="transfer", show_default=True)
@pass_config
def classical(cfg, grid, x_raw, y_raw, engine):
    """T_G(x, y) on the m x n grid graph."""
    x, y = parse_scalar(x_raw, "exact"), parse_scalar(y_raw, "exact")
    m, n = grid
    if engine == "transfer":
        t = tutte_grid(m, n, x, y, max_width=cfg.max_strip_width)
    else:
        t = tutte_classical(grid_graph(m, n), x, y, engine=engine)
    lines = [header(f"T_G({x_raw}, {y_raw}) on the {m}x{n} grid", f"engine {engine}"), result_line("T", t)]
    emit(cfg, "tutte classical", {"grid": [m, n], "x": scalar_to_json(x), "y": scalar_to_json(y)},
         {"T": scalar_to_json(t)}, lines, engine=engine)
