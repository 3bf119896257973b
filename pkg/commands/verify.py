"""
verify identity / korn-pak: both sides computed independently, exit 1 on mismatch.
"""
import click

from commands import MODES, parse_q, parse_x, pass_config, with_json
from components.report import emit, header, result_line, verdict
from components.serializers import identity_report_to_json
from services.correspondence import CorrespondenceParams, korn_pak_reduction, verify_theorem2
from services.cycles import GridGraph
from services.enumeration import all_tilings
from services.genfun import FLIPPED, STANDARD
from services.lattice import DomainSpec
from services.scalars import scalar_to_json
from utils.logging_utils import setup_logger

logger = setup_logger(__name__)


@click.group("verify")
def verify():
    """Check the tiling / Potts identity."""


@verify.command("identity")
@click.option("--m", "m", type=click.IntRange(min=1), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--q", "q_raw", required=True, help="P/Q, or complex:MU for q = exp(i MU).")
@click.option("--x", "x_raw", default="uniform:1", show_default=True, help="JSON file or uniform:VAL.")
@click.option("--mode", type=MODES, default="exact", show_default=True)
@click.option("--gauge", type=click.Choice(["a1", "a3"]), default="a1", show_default=True)
@click.option("--chirality", type=click.Choice([STANDARD, FLIPPED]), default=STANDARD, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@pass_config
def identity(cfg, m, n, q_raw, x_raw, mode, gauge, chirality, as_json):
    cfg = with_json(cfg, as_json)
    g = GridGraph(m, n)
    params = CorrespondenceParams(parse_q(q_raw, mode), parse_x(x_raw, mode, g.edge_count), mode)
    tilings = all_tilings(DomainSpec(m, n), max_tilings=cfg.max_tilings)
    report = verify_theorem2(m, n, params, tilings=tilings, chirality=chirality, gauge=gauge)
    lines = [
        header(f"Q^(mn/2) F_D = Z_G on the {m}x{n} grid graph", f"mode {mode}, gauge {gauge}, {chirality}"),
        result_line("lhs", report.lhs),
        result_line("rhs", report.rhs),
        result_line("rhs (deletion-contraction)", report.rhs_delcon),
        result_line("residual", report.residual),
        verdict(report.equal),
    ]
    inputs = {"m": m, "n": n, "q": scalar_to_json(params.q), "x": x_raw, "mode": mode,
              "gauge": gauge, "chirality": chirality}
    emit(cfg, "verify identity", inputs, identity_report_to_json(report), lines,
         engine="enumeration|subset|delcon")
    if not report.equal:
        logger.error("identity failed on %dx%d: lhs=%s rhs=%s", m, n, report.lhs, report.rhs)
        raise SystemExit(1)


@verify.command("korn-pak")
@click.option("--m", "m", type=click.IntRange(min=1), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@pass_config
def korn_pak(cfg, m, n):
    """Tiling count against 2 T_G(3,3)."""
    tilings = all_tilings(DomainSpec(m, n), max_tilings=cfg.max_tilings)
    count, t33, equal = korn_pak_reduction(m, n, tilings=tilings)
    ok = equal and count == 2 * t33
    lines = [result_line("tilings", count), result_line("2 T_G(3,3)", 2 * t33), verdict(ok)]
    emit(cfg, "verify korn-pak", {"m": m, "n": n},
         {"count": scalar_to_json(count), "twice_T33": scalar_to_json(2 * t33), "equal": ok}, lines,
         engine="enumeration|subset|delcon")
    if not ok:
        raise SystemExit(1)
