"""
Output builders shared by every command: the JSON envelope, the human-readable
header / result lines, and pandas tables. No domain logic here.
"""
import json

import click
import pandas as pd

from utils.formatters import _fmt


def envelope(command, inputs, result, cfg, engine=None):
    """Schema-stable JSON record: input echo, result, provenance."""
    provenance = {"budgets": cfg.budgets(), "seed": cfg.seed, "threads": cfg.threads}
    if engine is not None:
        provenance["engine"] = engine
    return {"command": command, "input": inputs, "result": result, "provenance": provenance}


def dumps(record):
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def header(title, subtitle=None):
    """Title line plus an optional grey subtitle, the text analogue of a page header."""
    lines = [click.style(title, bold=True)]
    if subtitle:
        lines.append(click.style(subtitle, fg="bright_black"))
    return "\n".join(lines)


def result_line(label, value, target=None, dec=6):
    """'label: value', with the target and relative gap when one is given."""
    text = f"{label}: {_fmt(value, dec)}"
    if target is not None and value is not None:
        try:
            gap = (float(value) - float(target)) / float(target) * 100
        except (TypeError, ValueError, ZeroDivisionError):
            gap = None
        suffix = f" ({'+' if gap >= 0 else ''}{gap:.2f}%)" if gap is not None else ""
        text += f"   target: {_fmt(target, dec)}{suffix}"
    return text


def verdict(ok):
    return click.style("OK", fg="green") if ok else click.style("MISMATCH", fg="red", bold=True)


def table(records, columns=None, dec=6):
    """Render a list of dicts (or a DataFrame) as an aligned text table."""
    df = records if isinstance(records, pd.DataFrame) else pd.DataFrame(records, columns=columns)
    if df.empty:
        return "(no rows)"
    shown = df.copy()
    for col in shown.columns:
        shown[col] = shown[col].map(lambda v: v if isinstance(v, (str, list, dict)) else _fmt(v, dec))
    return shown.to_string(index=False)


def emit(cfg, command, inputs, result, human_lines, engine=None):
    """Write the command output to stdout in the configured format."""
    if cfg.output == "json":
        click.echo(dumps(envelope(command, inputs, result, cfg, engine)))
        return
    for line in human_lines:
        click.echo(line)
