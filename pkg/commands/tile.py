"""
tile count / enumerate / validate
"""
import json

import click

from commands import pass_config
from components.report import dumps, emit, header, result_line, table, verdict
from components.serializers import tiling_from_json, tiling_to_json
from services.enumeration import EnumerationConfig, count_tilings, enumerate_tilings
from services.lattice import DomainSpec, validate_tiling
from services.tutte import korn_pak_count
from utils.logging_utils import setup_logger

logger = setup_logger(__name__)

SIDE = click.IntRange(min=1)


@click.group("tile")
def tile():
    """Count, enumerate and validate T-tetromino tilings of the 4m x 4n rectangle."""


@tile.command("count")
@click.option("--m", "m", type=SIDE, required=True, help="Width in units of 4 cells.")
@click.option("--n", "n", type=SIDE, required=True, help="Height in units of 4 cells.")
@click.option("--pruning", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--korn-pak", "korn_pak", is_flag=True, help="Cross-check against 2 T_G(3,3).")
@pass_config
def count(cfg, m, n, pruning, korn_pak):
    d = DomainSpec(m, n)
    total = count_tilings(d, pruning=pruning == "on", threads=cfg.threads)
    result = {"count": str(total)}
    lines = [str(total)]
    ok = True
    if korn_pak:
        via_tutte = korn_pak_count(m, n, max_width=cfg.max_strip_width)
        ok = via_tutte == total
        result["korn_pak"] = str(via_tutte)
        result["agree"] = ok
        lines.append(f"2 T_G(3,3) = {via_tutte}  {verdict(ok)}")
    emit(cfg, "tile count", {"m": m, "n": n, "pruning": pruning}, result, lines,
         engine="backtracking" + ("+transfer" if korn_pak else ""))
    if not ok:
        raise SystemExit(1)


@tile.command("enumerate")
@click.option("--m", "m", type=SIDE, required=True)
@click.option("--n", "n", type=SIDE, required=True)
@click.option("--pruning", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--limit", type=click.IntRange(min=1), default=None, help="Stop after this many tilings.")
@click.option("--emit", "emit_mode", type=click.Choice(["full-tilings", "count-only"]), default="full-tilings", show_default=True)
@click.option("--out", type=click.File("w", encoding="utf-8"), default="-", show_default=True,
              help="JSON-lines destination, one tiling per line.")
@pass_config
def enumerate_cmd(cfg, m, n, pruning, limit, emit_mode, out):
    d = DomainSpec(m, n)
    settings = EnumerationConfig(pruning=pruning == "on", limit=limit, emit=emit_mode)
    if settings.emit == "count-only":
        total = count_tilings(d, pruning=settings.pruning, threads=cfg.threads)
        if settings.limit is not None:
            total = min(total, settings.limit)
        emit(cfg, "tile enumerate", {"m": m, "n": n, "pruning": pruning, "limit": limit, "emit": emit_mode},
             {"count": str(total)}, [str(total)], engine="backtracking")
        return
    cap = limit if limit is not None else cfg.max_tilings
    written = 0
    for t in enumerate_tilings(d, EnumerationConfig(pruning=pruning == "on", limit=cap), threads=cfg.threads):
        out.write(dumps(tiling_to_json(t)) + "\n")
        written += 1
    if limit is None and written >= cfg.max_tilings:
        logger.warning("%s: stopped at the %d-tiling budget", d, cfg.max_tilings)
    logger.info("wrote %d tilings to %s", written, out.name)
    if out.name != "<stdout>":
        emit(cfg, "tile enumerate", {"m": m, "n": n, "pruning": pruning, "limit": limit},
             {"written": str(written), "out": out.name}, [f"wrote {written} tilings of {d} to {out.name}"],
             engine="backtracking")


@tile.command("validate")
@click.argument("source", type=click.File("r", encoding="utf-8"))
@pass_config
def validate(cfg, source):
    """Check every tiling in a JSON-lines file against the cover and colouring rules."""
    rows = []
    for lineno, line in enumerate(source, start=1):
        if not line.strip():
            continue
        report = validate_tiling(tiling_from_json(json.loads(line), strict=False))
        rows.append({
            "line": lineno,
            "valid": report.valid,
            "violations": str(len(report.violations)),
            "kinds": ",".join(report.kinds()),
        })
    ok = all(r["valid"] for r in rows)
    lines = [header(f"{len(rows)} tiling(s) checked"), table(rows), verdict(ok)]
    emit(cfg, "tile validate", {"source": source.name}, {"tilings": rows, "valid": ok}, lines)
    if not ok:
        raise SystemExit(1)
