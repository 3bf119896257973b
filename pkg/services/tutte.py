"""
Multivariate Tutte polynomial  Z_G(Q, v) = sum_{A subset E} Q^k(A) prod_{e in A} v_e.

Three independent engines: subset expansion (oracle), deletion-contraction,
and a connectivity-state transfer matrix for m x n grid graphs. The classical
T_G(x, y) follows from Z_G = Q^k(G) v^(|V|-k(G)) T_G(1 + Q/v, 1 + v).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import time

from services.cycles import GridGraph, UnionFind
from services.errors import BudgetError, DomainError, RangeError
from services.scalars import ScalarMode, common_mode, one, zero
from utils.logging_utils import setup_logger

logger = setup_logger(__name__)

MAX_SUBSET_EDGES = 25
MAX_STRIP_WIDTH = 10


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: object = Fraction(1)

    @property
    def is_loop(self):
        return self.u == self.v


@dataclass(frozen=True)
class WeightedGraph:
    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise RangeError(f"vertex count must be >= 0, got {self.vertex_count}")
        for e in self.edges:
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise RangeError(f"edge ({e.u},{e.v}) has an endpoint outside 0..{self.vertex_count - 1}")
        common_mode([e.weight for e in self.edges])

    def with_weights(self, weights):
        if len(weights) != len(self.edges):
            raise RangeError(f"{len(weights)} weights for {len(self.edges)} edges")
        return WeightedGraph(self.vertex_count, tuple(Edge(e.u, e.v, w) for e, w in zip(self.edges, weights)))

    def add_edge(self, u, v, weight):
        return WeightedGraph(self.vertex_count, self.edges + (Edge(u, v, weight),))

    def disjoint_union(self, other):
        shift = self.vertex_count
        moved = tuple(Edge(e.u + shift, e.v + shift, e.weight) for e in other.edges)
        return WeightedGraph(self.vertex_count + other.vertex_count, self.edges + moved)


@dataclass(frozen=True)
class PottsPoint:
    """Q plus edge weights: a single scalar (uniform) or one per edge; None keeps the graph's own."""
    Q: object
    v: object = None

    @property
    def mode(self):
        values = [self.Q]
        if isinstance(self.v, (tuple, list)):
            values.extend(self.v)
        elif self.v is not None:
            values.append(self.v)
        return common_mode(values)

    def weights_for(self, edge_count, graph=None):
        if self.v is None:
            if graph is None:
                raise RangeError("edge weights missing")
            return tuple(e.weight for e in graph.edges)
        if isinstance(self.v, (tuple, list)):
            if len(self.v) != edge_count:
                raise RangeError(f"{len(self.v)} weights for {edge_count} edges")
            return tuple(self.v)
        return (self.v,) * edge_count


def grid_graph(m, n, v=Fraction(1)):
    """The m x n grid graph in canonical edge order (horizontal rows first, then vertical)."""
    g = GridGraph(m, n)
    weights = v if isinstance(v, (tuple, list)) else (v,) * g.edge_count
    return WeightedGraph(g.vertex_count, tuple(Edge(e.u, e.v, w) for e, w in zip(g.edges, weights)))


def _resolve(g, p):
    weights = p.weights_for(len(g.edges), g)
    mode = common_mode([p.Q, *weights])
    return p.Q, weights, mode


# ── Subset expansion ──────────────────────────────────────────────────
def z_subset(g, p, max_edges=MAX_SUBSET_EDGES):
    Q, weights, mode = _resolve(g, p)
    if len(g.edges) > max_edges:
        raise BudgetError(f"subset expansion over {len(g.edges)} edges exceeds the {max_edges}-edge budget")
    ends = [(e.u, e.v) for e in g.edges]
    n_edges = len(ends)
    total = zero(mode)
    q_powers = [one(mode)]
    for _ in range(g.vertex_count):
        q_powers.append(q_powers[-1] * Q)

    # depth-first over include/exclude, carrying component labels
    stack = [(0, tuple(range(g.vertex_count)), g.vertex_count, one(mode))]
    while stack:
        i, labels, k, w = stack.pop()
        if i == n_edges:
            total += q_powers[k] * w
            continue
        stack.append((i + 1, labels, k, w))
        a, b = ends[i]
        la, lb = labels[a], labels[b]
        if la == lb:
            stack.append((i + 1, labels, k, w * weights[i]))
        else:
            merged = tuple(la if x == lb else x for x in labels)
            stack.append((i + 1, merged, k - 1, w * weights[i]))
    return total


# ── Deletion-contraction ──────────────────────────────────────────────
def _contract(vertex_count, edges, idx):
    u, w = edges[idx][0], edges[idx][1]
    keep, gone = min(u, w), max(u, w)

    def relabel(x):
        if x == gone:
            return keep
        return x - 1 if x > gone else x

    rest = edges[:idx] + edges[idx + 1:]
    return vertex_count - 1, tuple((relabel(a), relabel(b), wt) for a, b, wt in rest)


def _delcon(vertex_count, edges, Q, mode):
    if not edges:
        return Q ** vertex_count if vertex_count else one(mode)
    u, w, wt = edges[-1]
    rest = edges[:-1]
    if u == w:
        return (1 + wt) * _delcon(vertex_count, rest, Q, mode)
    deleted = _delcon(vertex_count, rest, Q, mode)
    vc, contracted = _contract(vertex_count, edges, len(edges) - 1)
    return deleted + wt * _delcon(vc, contracted, Q, mode)


def z_delcon(g, p):
    """Z_G = Z_{G-e} + v_e Z_{G/e}, pivoting on the last edge; loops give (1 + v_e)."""
    Q, weights, mode = _resolve(g, p)
    edges = tuple((e.u, e.v, wt) for e, wt in zip(g.edges, weights))
    return _delcon(g.vertex_count, edges, Q, mode)


# ── Transfer matrix over non-crossing connectivity states ─────────────
def _canonical(labels):
    seen = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def noncrossing_partitions(m):
    """All non-crossing partitions of m ordered points as restricted-growth strings."""
    out = []

    def grow(prefix, top):
        if len(prefix) == m:
            if _is_noncrossing(prefix):
                out.append(tuple(prefix))
            return
        for label in range(top + 2):
            grow(prefix + [label], max(top, label))

    if m == 0:
        return [()]
    grow([0], 0)
    return out


def _is_noncrossing(labels):
    n = len(labels)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    if labels[a] == labels[c] and labels[b] == labels[d] and labels[a] != labels[b]:
                        return False
    return True


@lru_cache(maxsize=None)
def _detach(state, site):
    """Vertex at site leaves the boundary (vertical edge absent). Returns (new state, closes a cluster)."""
    label = state[site]
    closes = state.count(label) == 1
    fresh = max(state) + 1
    return _canonical(state[:site] + (fresh,) + state[site + 1:]), closes


@lru_cache(maxsize=None)
def _join(state, site):
    """Horizontal edge between site and site+1 present."""
    a, b = state[site], state[site + 1]
    if a == b:
        return state
    return _canonical(tuple(a if x == b else x for x in state))


def z_transfer(m, n, p, max_width=MAX_STRIP_WIDTH):
    """Grid-graph Z built slice by slice; a slice is one row of m vertices."""
    if m < 1 or n < 1:
        raise RangeError(f"grid must be at least 1x1, got {m}x{n}")
    if m > max_width:
        raise BudgetError(f"strip width {m} exceeds the transfer budget {max_width}")
    g = GridGraph(m, n)
    weights = p.weights_for(g.edge_count)
    mode = common_mode([p.Q, *weights])
    Q = p.Q
    unit = one(mode)
    horizontal = {(e.u, e.v): weights[e.index] for e in g.edges if e.horizontal}
    vertical = {(e.u, e.v): weights[e.index] for e in g.edges if not e.horizontal}
    started = time.perf_counter()

    states = {tuple(range(m)): unit}
    for row in range(n):
        if row:
            for site in range(m):
                v = vertical[((row - 1) * m + site, row * m + site)]
                nxt = {}
                for state, w in states.items():
                    nxt[state] = nxt.get(state, 0) + w * v
                    moved, closes = _detach(state, site)
                    nxt[moved] = nxt.get(moved, 0) + (w * Q if closes else w)
                states = nxt
        for site in range(m - 1):
            v = horizontal[(row * m + site, row * m + site + 1)]
            nxt = {}
            for state, w in states.items():
                nxt[state] = nxt.get(state, 0) + w
                joined = _join(state, site)
                nxt[joined] = nxt.get(joined, 0) + w * v
            states = nxt
        logger.debug("transfer %dx%d: row %d, %d states", m, n, row, len(states))

    total = zero(mode)
    for state, w in states.items():
        total += w * Q ** (max(state) + 1)
    logger.info("transfer %dx%d done in %.3fs", m, n, time.perf_counter() - started)
    return total


# ── Classical Tutte polynomial ────────────────────────────────────────
def potts_from_tutte(x, y):
    """(Q, v) with x = 1 + Q/v, y = 1 + v."""
    if x == 1 or y == 1:
        raise DomainError(f"T_G({x}, {y}) sits on a degenerate line (x=1 or y=1)")
    return (x - 1) * (y - 1), y - 1


def graph_components(g):
    uf = UnionFind(range(g.vertex_count))
    for e in g.edges:
        uf.union(e.u, e.v)
    return uf.n_clusters


def tutte_classical(g, x, y, engine="delcon"):
    Q, v = potts_from_tutte(x, y)
    mode = common_mode([x, y])
    if mode is ScalarMode.EXACT:
        Q, v = Fraction(Q), Fraction(v)
    p = PottsPoint(Q, v)
    k = graph_components(g)
    if engine == "subset":
        z = z_subset(g, p)
    elif engine == "delcon":
        z = z_delcon(g, p)
    else:
        raise RangeError(f"unknown engine {engine!r}")
    return z / (Q ** k * v ** (g.vertex_count - k))


def tutte_grid(m, n, x, y, max_width=MAX_STRIP_WIDTH):
    """T_G(x, y) on the m x n grid graph through the transfer engine."""
    Q, v = potts_from_tutte(Fraction(x), Fraction(y))
    z = z_transfer(m, n, PottsPoint(Q, v), max_width=max_width)
    return z / (Q * v ** (m * n - 1))


def korn_pak_count(m, n, max_width=MAX_STRIP_WIDTH):
    """2 T_G(3, 3) on the m x n grid graph: the number of tilings of the 4m x 4n rectangle."""
    t = tutte_grid(m, n, 3, 3, max_width=max_width)
    if t.denominator != 1:
        raise DomainError(f"T_G(3,3) came out non-integral: {t}")
    return 2 * t.numerator

