"""
CLI command groups. Each module defines one click group; app.py registers them
on the root group.
"""
from dataclasses import replace
from fractions import Fraction
import cmath
import json

import click

from services.config import RunConfig
from services.errors import ModeError, RangeError
from services.scalars import ScalarMode, parse_scalar

pass_config = click.make_pass_decorator(RunConfig)

MODES = click.Choice([m.value for m in ScalarMode])


def with_json(cfg, flag):
    """A command-level --json wins over the global format."""
    return replace(cfg, output="json") if flag else cfg


def parse_q(raw, mode):
    """'p/q' (exact or complex) or 'complex:MU' for q = exp(i MU)."""
    mode = ScalarMode(mode)
    if raw.startswith("complex:"):
        if mode is ScalarMode.EXACT:
            raise ModeError(f"{raw!r} needs --mode complex")
        mu = float(raw.split(":", 1)[1])
        return cmath.exp(1j * mu)
    return parse_scalar(raw, mode)


def parse_x(raw, mode, edge_count):
    """'uniform:VAL' or a JSON file: a list in canonical edge order or an {edge: value} object."""
    mode = ScalarMode(mode)
    if raw.startswith("uniform:"):
        value = parse_scalar(raw.split(":", 1)[1], mode)
        return {e: value for e in range(edge_count)}
    with open(raw, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("x", data)
    if isinstance(data, list):
        if len(data) != edge_count:
            raise RangeError(f"{len(data)} x-values for {edge_count} edges")
        return {e: parse_scalar(v, mode) for e, v in enumerate(data)}
    return {int(e): parse_scalar(v, mode) for e, v in data.items()}


def parse_real(raw):
    """Exact Fraction when written without a decimal point, else float."""
    text = str(raw).strip()
    if "." in text or "e" in text.lower():
        return float(text)
    try:
        return Fraction(text)
    except ValueError:
        raise RangeError(f"not a number: {raw!r}") from None
