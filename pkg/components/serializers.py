"""
JSON codecs for tilings, weight systems, graphs, identity reports and entropy points.
Exact scalars travel as "p/q" strings, complex ones as [re, im]; see schema/README.md.
"""
from services.errors import RangeError
from services.genfun import WeightSystem
from services.lattice import DomainSpec, Tiling, place_tile
from services.scalars import ScalarMode, parse_scalar, scalar_to_json
from services.tutte import Edge, WeightedGraph


def _require(record, *keys):
    missing = [k for k in keys if k not in record]
    if missing:
        raise RangeError(f"record is missing {', '.join(missing)}")


# ── Tiling ────────────────────────────────────────────────────────────
def tiling_to_json(t):
    return {
        "m": t.domain.m,
        "n": t.domain.n,
        "tiles": [{"o": tile.orientation, "anchor": list(tile.anchor)} for tile in t.tiles],
    }


def tiling_from_json(record, strict=True):
    """strict=False admits rule-breaking placements so the result can be fed to validate_tiling."""
    _require(record, "m", "n", "tiles")
    d = DomainSpec(record["m"], record["n"])
    tiles = []
    for entry in record["tiles"]:
        _require(entry, "o", "anchor")
        i, j = entry["anchor"]
        tiles.append(place_tile(entry["o"], (i, j), d, strict=strict))
    return Tiling.of(d, tiles)


# ── WeightSystem ──────────────────────────────────────────────────────
def weights_to_json(w):
    entries = sorted(w.a.items(), key=lambda kv: (kv[0][1][1], kv[0][1][0], kv[0][0]))
    return {
        "m": w.domain.m,
        "n": w.domain.n,
        "mode": ScalarMode(w.mode).value,
        "a": [{"o": o, "w": list(v), "value": scalar_to_json(value)} for (o, v), value in entries],
        "b1": scalar_to_json(w.b1),
        "b2": scalar_to_json(w.b2),
    }


def weights_from_json(record, d=None, mode=None):
    """d and mode override what the record carries (the CLI passes both)."""
    if d is None:
        _require(record, "m", "n")
        d = DomainSpec(record["m"], record["n"])
    mode = ScalarMode(mode or record.get("mode", ScalarMode.EXACT.value))
    a = {}
    for entry in record.get("a", []):
        _require(entry, "o", "w", "value")
        x, y = entry["w"]
        a[(entry["o"], (x, y))] = parse_scalar(entry["value"], mode)
    unit = "1" if mode is ScalarMode.EXACT else [1.0, 0.0]
    b1 = parse_scalar(record.get("b1", unit), mode)
    b2 = parse_scalar(record.get("b2", unit), mode)
    return WeightSystem(d, a, b1, b2, mode)


# ── WeightedGraph ─────────────────────────────────────────────────────
def graph_to_json(g):
    return {
        "vertices": g.vertex_count,
        "edges": [[e.u, e.v, scalar_to_json(e.weight)] for e in g.edges],
    }


def graph_from_json(record, mode=None):
    _require(record, "vertices", "edges")
    if mode is None:
        mode = ScalarMode.COMPLEX if any(isinstance(e[2], list) for e in record["edges"]) else ScalarMode.EXACT
    edges = []
    for entry in record["edges"]:
        if len(entry) != 3:
            raise RangeError(f"edge must be [u, v, weight], got {entry!r}")
        u, v, raw = entry
        edges.append(Edge(int(u), int(v), parse_scalar(raw, mode)))
    return WeightedGraph(int(record["vertices"]), tuple(edges))


# ── Reports ───────────────────────────────────────────────────────────
def class_record_to_json(r):
    """Counts become exact strings; edge indices stay integers."""
    return {
        "A": list(r["A"]),
        "k": scalar_to_json(r["k"]),
        "loops": scalar_to_json(r["loops"]),
        "size": scalar_to_json(r["size"]),
        "b_exponent_multiset": {e: scalar_to_json(c) for e, c in r["b_exponent_multiset"].items()},
    }


def identity_report_to_json(r):
    return {
        "m": r.m,
        "n": r.n,
        "mode": r.mode,
        "Q": scalar_to_json(r.Q),
        "lhs": scalar_to_json(r.lhs),
        "rhs": scalar_to_json(r.rhs),
        "rhs_delcon": scalar_to_json(r.rhs_delcon),
        "F": scalar_to_json(r.f_value),
        "equal": r.equal,
        "residual": r.residual,
    }


def entropy_point_to_json(p):
    return {
        "regime": p.regime,
        "Q": p.Q,
        "parameter": p.parameter,
        "log_S": p.log_S,
        "S": p.S,
        "error_bound": p.error_bound,
        "alternatives": dict(sorted(p.alternatives.items())),
    }
