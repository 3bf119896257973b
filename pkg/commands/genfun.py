"""
genfun eval: F_D at a weight system read from JSON.
"""
import json

import click

from commands import MODES, pass_config
from components.report import emit, header, result_line
from components.serializers import weights_to_json, weights_from_json
from services.genfun import WeightSystem, f_eval
from services.lattice import DomainSpec
from services.scalars import scalar_to_json


@click.group("genfun")
def genfun():
    """Weighted tiling generating function."""


@genfun.command("eval")
@click.option("--m", "m", type=click.IntRange(min=1), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--weights", type=click.File("r", encoding="utf-8"), default=None,
              help="WeightSystem JSON; all weights 1 when omitted.")
@click.option("--mode", type=MODES, default="exact", show_default=True)
@pass_config
def eval_cmd(cfg, m, n, weights, mode):
    d = DomainSpec(m, n)
    if weights is None:
        w = WeightSystem.uniform(d, mode)
    else:
        w = weights_from_json(json.load(weights), d=d, mode=mode)
    value = f_eval(d, w, max_tilings=cfg.max_tilings)
    lines = [header(f"F_D on {d}", f"{len(w.a)} a-weight(s), mode {mode}"), result_line("F", value)]
    emit(cfg, "genfun eval", {"m": m, "n": n, "mode": mode, "weights": weights_to_json(w)},
         {"F": scalar_to_json(value)}, lines, engine="enumeration")
