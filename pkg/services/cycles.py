"""
Tiling -> edge subset map, cluster and loop statistics on the grid graph G.

G has the even black vertices (4a+2, 4b+2) as vertices and nearest-neighbour
edges of length 4; each edge e owns the interior white vertex w(e) at its
midpoint. A tiling puts e in A exactly when the two flat sides meeting at w(e)
run parallel to e, i.e. when no cycle of the tiling cuts e.
"""
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import comb

from services.errors import InvariantError, TilingValidationError
from services.genfun import summarize
from services.lattice import DomainSpec, validate_tiling
from utils.logging_utils import setup_logger

logger = setup_logger(__name__)


class UnionFind:
    """Union by rank with path compression over a fixed element set."""

    def __init__(self, elements):
        self._leader = {s: s for s in elements}
        self._rank = {s: 0 for s in elements}
        self.n_clusters = len(self._leader)

    def find(self, s):
        path = [s]
        parent = self._leader[s]
        while parent != self._leader[parent]:
            path.append(parent)
            parent = self._leader[parent]
        for a in path:
            self._leader[a] = parent
        return parent

    def union(self, a, b):
        s1, s2 = self.find(a), self.find(b)
        if s1 == s2:
            return False
        r1, r2 = self._rank[s1], self._rank[s2]
        if r2 > r1:
            s1, s2 = s2, s1
        elif r1 == r2:
            self._rank[s1] += 1
        self._leader[s2] = s1
        self.n_clusters -= 1
        return True


@dataclass(frozen=True)
class GridEdge:
    index: int
    u: int
    v: int
    horizontal: bool
    white: tuple


@dataclass(frozen=True)
class GridGraph:
    """m columns by n rows of vertices; vertex (a, b) has index b*m + a."""
    m: int
    n: int

    @classmethod
    def of_domain(cls, d):
        return cls(d.m, d.n)

    @property
    def domain(self):
        return DomainSpec(self.m, self.n)

    @property
    def vertex_count(self):
        return self.m * self.n

    @cached_property
    def edges(self):
        m, n = self.m, self.n
        out = []
        for b in range(n):
            for a in range(m - 1):
                out.append(GridEdge(len(out), b * m + a, b * m + a + 1, True, (4 * a + 4, 4 * b + 2)))
        for b in range(n - 1):
            for a in range(m):
                out.append(GridEdge(len(out), b * m + a, (b + 1) * m + a, False, (4 * a + 2, 4 * b + 4)))
        return tuple(out)

    @cached_property
    def edge_at_white(self):
        return {e.white: e.index for e in self.edges}

    @property
    def edge_count(self):
        return len(self.edges)


@dataclass(frozen=True, order=True)
class EdgeSubset:
    """Bitset over the canonical edge order of a GridGraph."""
    mask: int
    size: int

    @classmethod
    def from_edges(cls, indices, size):
        mask = 0
        for e in indices:
            if not 0 <= e < size:
                raise InvariantError(f"edge {e} outside 0..{size - 1}")
            mask |= 1 << e
        return cls(mask, size)

    @classmethod
    def all_subsets(cls, g):
        return [cls(mask, g.edge_count) for mask in range(1 << g.edge_count)]

    def __contains__(self, e):
        return bool(self.mask >> e & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    @property
    def edges(self):
        return tuple(e for e in range(self.size) if self.mask >> e & 1)


@dataclass(frozen=True)
class ClusterStats:
    k: int
    loops: int
    size: int


def _junctions(tiling):
    """Interior white vertex -> list of long-side-horizontal flags of the tiles meeting there."""
    d = tiling.domain
    out = {}
    for t in tiling.tiles:
        if t.white is None or d.on_boundary(*t.white):
            continue
        out.setdefault(t.white, []).append(t.long_side_horizontal)
    return out


def edge_subset_of(t):
    g = GridGraph.of_domain(t.domain)
    junctions = _junctions(t)
    mask = 0
    for e in g.edges:
        flags = junctions.get(e.white, [])
        if len(flags) != 2 or flags[0] != flags[1]:
            report = validate_tiling(t)
            if not report.valid:
                raise TilingValidationError(report)
            raise InvariantError(f"white vertex {e.white} is met by flat sides {flags}")
        if flags[0] == e.horizontal:
            mask |= 1 << e.index
    return EdgeSubset(mask, g.edge_count)


def component_count(g, a):
    uf = UnionFind(range(g.vertex_count))
    for e in g.edges:
        if e.index in a:
            uf.union(e.u, e.v)
    return uf.n_clusters


# Diagonal steps on the medial lattice of white vertices.
_NE, _NW, _SE, _SW = (2, 2), (-2, 2), (2, -2), (-2, -2)


def _strand_pairs(g, a, w):
    """How the two loop strands through white vertex w are connected."""
    d = g.domain
    x, y = w
    if d.on_boundary(x, y):
        inside = [s for s in (_NE, _NW, _SE, _SW) if d.contains_vertex(x + s[0], y + s[1])]
        return (tuple(inside),)
    e = g.edges[g.edge_at_white[w]]
    kept = e.index in a
    # a kept edge is not crossed: strands run alongside it
    if e.horizontal == kept:
        return ((_NW, _NE), (_SW, _SE))
    return ((_NW, _SW), (_NE, _SE))


def trace_loops(g, a):
    """Count the closed loops of the medial lattice that separate the clusters of (V, A) from their complement."""
    d = g.domain
    whites = [(x, y) for y in range(0, d.N + 1, 2) for x in range(0, d.M + 1, 2) if (x + y) % 4 == 2]
    partner = {}
    for w in whites:
        for s1, s2 in _strand_pairs(g, a, w):
            partner[(w, s1)] = s2
            partner[(w, s2)] = s1
    seen = set()
    loops = 0
    for start in sorted(partner):
        if start in seen:
            continue
        loops += 1
        w, step = start
        while (w, step) not in seen:
            seen.add((w, step))
            nxt = (w[0] + step[0], w[1] + step[1])
            back = (-step[0], -step[1])
            seen.add((nxt, back))
            w, step = nxt, partner[(nxt, back)]
    return loops


def cluster_stats(g, a):
    k = component_count(g, a)
    loops = 2 * k + len(a) - g.vertex_count
    traced = trace_loops(g, a)
    if traced != loops:
        raise InvariantError(f"Euler relation gives {loops} loops but tracing found {traced} (A={a.edges})")
    return ClusterStats(k, loops, len(a))


def class_partition(tilings, weights=None):
    """Group tilings by edge subset; values are per-tiling weight summaries, keys in mask order."""
    groups = {}
    for t in tilings:
        groups.setdefault(edge_subset_of(t), []).append(summarize(t, weights))
    return dict(sorted(groups.items()))


def expected_windings(loops):
    """Winding multiset of a class with the given loop count: each loop contributes +-1 independently."""
    return Counter({loops - 2 * k: comb(loops, k) for k in range(loops + 1)})


def class_records(d, tilings):
    g = GridGraph.of_domain(d)
    records = []
    for a, members in class_partition(tilings).items():
        stats = cluster_stats(g, a)
        exponents = Counter(s.b1_count - s.b2_count for s in members)
        records.append({
            "A": list(a.edges),
            "k": stats.k,
            "loops": stats.loops,
            "size": len(members),
            "b_exponent_multiset": {str(e): c for e, c in sorted(exponents.items())},
        })
    logger.info("%s: %d classes from %d tilings", d, len(records), sum(r["size"] for r in records))
    return records
