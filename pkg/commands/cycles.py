"""
cycles classes: tilings grouped by edge subset A of the grid graph.
"""
import click

from commands import pass_config
from components.report import dumps, emit, header, table
from components.serializers import class_record_to_json
from services.cycles import class_records
from services.enumeration import all_tilings
from services.lattice import DomainSpec


@click.group("cycles")
def cycles():
    """Tiling classes, cluster counts and loop counts."""


@cycles.command("classes")
@click.option("--m", "m", type=click.IntRange(min=1), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--out", type=click.File("w", encoding="utf-8"), default=None,
              help="Write one JSON record per class to this file.")
@pass_config
def classes(cfg, m, n, out):
    d = DomainSpec(m, n)
    records = class_records(d, all_tilings(d, max_tilings=cfg.max_tilings))
    serialized = [class_record_to_json(r) for r in records]
    if out is not None:
        for r in serialized:
            out.write(dumps(r) + "\n")
    rows = [{"A": " ".join(map(str, r["A"])) or "-", "k": r["k"], "loops": r["loops"], "size": r["size"],
             "B1-B2": " ".join(f"{e}:{c}" for e, c in r["b_exponent_multiset"].items())}
            for r in records]
    lines = [header(f"{len(records)} classes on {d}", f"{sum(r['size'] for r in records)} tilings"), table(rows)]
    emit(cfg, "cycles classes", {"m": m, "n": n}, {"classes": serialized}, lines, engine="enumeration")
