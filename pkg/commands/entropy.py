"""
entropy baxter / finite-size
"""
from dataclasses import replace
import math

import click

from commands import parse_real, pass_config, with_json
from components.report import emit, header, result_line, table
from components.serializers import entropy_point_to_json
from services.baxter import (
    QuadratureConfig,
    entropy_at,
    entropy_integral,
    entropy_series,
    finite_size_table,
)
from services.errors import DomainError


@click.group("entropy")
def entropy():
    """Tiling entropy on the self-dual line v = sqrt(Q)."""


@entropy.command("baxter")
@click.option("--Q", "q_raw", default=None, help="Potts Q > 0.")
@click.option("--mu", type=float, default=None, help="Subcritical parameter in (0, pi/2).")
@click.option("--lambda", "lam", type=float, default=None, help="Supercritical parameter > 0.")
@click.option("--tol", type=float, default=None, help="Overrides the global tolerance.")
@pass_config
def baxter(cfg, q_raw, mu, lam, tol):
    """Closed-form log S, with the regime picked from Q."""
    given = [v is not None for v in (q_raw, mu, lam)]
    if sum(given) != 1:
        raise click.UsageError("give exactly one of --Q, --mu and --lambda")
    if tol is not None:
        cfg = replace(cfg, tol=tol)
    quad = QuadratureConfig(tol=cfg.tol)
    if mu is not None:
        point = entropy_integral(mu, quad)
    elif lam is not None:
        point = entropy_series(lam, cfg.tol)
    else:
        point = entropy_at(parse_real(q_raw), quad)
    lines = [
        header(f"{point.regime} regime, Q = {point.Q:.12g}"),
        result_line("log S", point.log_S, dec=15),
        result_line("S", point.S, dec=12),
        result_line("error bound", point.error_bound, dec=3),
    ]
    for name, value in sorted(point.alternatives.items()):
        lines.append(result_line(f"  {name}", value, dec=12))
    inputs = {"Q": q_raw, "mu": mu, "lambda": lam, "tol": cfg.tol}
    emit(cfg, "entropy baxter", inputs, entropy_point_to_json(point), lines,
         engine={"subcritical": "quadrature", "supercritical": "series", "critical": "gamma"}[point.regime])


@entropy.command("finite-size")
@click.option("--Q", "q_raw", required=True)
@click.option("--max-size", "max_size", type=click.IntRange(min=1), default=6, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@pass_config
def finite_size(cfg, q_raw, max_size, as_json):
    """(Q^(-mn/2) Z_G(Q, sqrt Q))^(1/mn) on L x L grids, L = 1..max-size."""
    cfg = with_json(cfg, as_json)
    Q = parse_real(q_raw)
    if not Q > 0:
        raise DomainError(f"Q must be positive, got {q_raw}")
    if max_size > cfg.max_strip_width:
        raise click.UsageError(f"--max-size {max_size} exceeds the strip-width budget {cfg.max_strip_width}")
    df, target = finite_size_table(Q, max_size, max_width=cfg.max_strip_width)
    records = [
        {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in row.items()}
        for row in df.to_dict(orient="records")
    ]
    lines = [header(f"Finite-size entropy estimates, Q = {q_raw}", f"closed form S = {target.S:.12g}"),
             table(df)]
    emit(cfg, "entropy finite-size", {"Q": q_raw, "max_size": max_size},
         {"estimates": records, "target": entropy_point_to_json(target)}, lines, engine="transfer")
