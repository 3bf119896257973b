from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from services.cycles import (
    EdgeSubset,
    GridGraph,
    UnionFind,
    class_partition,
    class_records,
    cluster_stats,
    component_count,
    edge_subset_of,
    expected_windings,
    trace_loops,
)
from services.errors import InvariantError, TilingValidationError
from services.genfun import WeightSystem, b_type_weight_assignment
from services.lattice import DomainSpec, Tiling, white_vertices


def test_union_find_counts_clusters():
    uf = UnionFind(range(5))
    assert uf.union(0, 1)
    assert uf.union(3, 4)
    assert not uf.union(1, 0)
    assert uf.n_clusters == 3
    assert uf.find(0) == uf.find(1)


def test_grid_graph_edge_order():
    g = GridGraph(2, 2)
    assert [(e.u, e.v, e.horizontal) for e in g.edges] == [
        (0, 1, True), (2, 3, True), (0, 2, False), (1, 3, False),
    ]
    assert [e.white for e in g.edges] == [(4, 2), (4, 6), (2, 4), (6, 4)]
    assert sorted(g.edge_at_white) == sorted(white_vertices(g.domain, interior=True))


def test_edge_subset_bitset():
    a = EdgeSubset.from_edges([0, 3], 4)
    assert 0 in a and 3 in a and 1 not in a
    assert len(a) == 2
    assert a.edges == (0, 3)
    with pytest.raises(InvariantError):
        EdgeSubset.from_edges([4], 4)


def test_empty_subset_has_one_loop_per_vertex():
    g = GridGraph(2, 3)
    stats = cluster_stats(g, EdgeSubset(0, g.edge_count))
    assert (stats.k, stats.loops, stats.size) == (6, 6, 0)


def test_full_cycle_has_two_loops():
    g = GridGraph(2, 2)
    stats = cluster_stats(g, EdgeSubset((1 << 4) - 1, 4))
    assert (stats.k, stats.loops) == (1, 2)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2)])
def test_euler_relation_matches_tracing_exhaustively(m, n):
    g = GridGraph(m, n)
    for a in EdgeSubset.all_subsets(g):
        stats = cluster_stats(g, a)
        assert stats.loops == trace_loops(g, a)


@pytest.mark.slow
@pytest.mark.parametrize("m, n", [(3, 4), (4, 3)])
def test_euler_relation_exhaustive_3x4(m, n):
    g = GridGraph(m, n)
    for a in EdgeSubset.all_subsets(g):
        cluster_stats(g, a)


def test_euler_relation_on_sampled_4x4_subsets(rng):
    g = GridGraph(4, 4)
    for _ in range(2000):
        cluster_stats(g, EdgeSubset(rng.getrandbits(g.edge_count), g.edge_count))


@settings(max_examples=100)
@given(st.integers(0, (1 << 60) - 1))
def test_euler_relation_on_random_6x6_subsets(bits):
    g = GridGraph(6, 6)
    a = EdgeSubset(bits, g.edge_count)
    k = component_count(g, a)
    assert trace_loops(g, a) == 2 * k + len(a) - g.vertex_count


def test_expected_windings():
    assert expected_windings(0) == Counter({0: 1})
    assert expected_windings(2) == Counter({2: 1, 0: 2, -2: 1})


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_class_structure(m, n, rng, tilings):
    d = DomainSpec(m, n)
    g = GridGraph(m, n)
    found = tilings(m, n)
    a = {(o, w): Fraction(rng.randint(1, 9), rng.randint(1, 9))
         for w in white_vertices(d, interior=True) for o in (1, 2, 3, 4)}
    q = Fraction(16)
    b1, b2 = b_type_weight_assignment(q)
    weights = WeightSystem(d, a, b1, b2)
    classes = class_partition(found, weights)
    assert sum(len(members) for members in classes.values()) == len(found)
    assert len(classes) == 2 ** g.edge_count
    for subset, members in classes.items():
        stats = cluster_stats(g, subset)
        assert len(members) == 2 ** stats.loops
        assert len({s.a_product for s in members}) == 1
        assert all((s.b1_count - s.b2_count) % 4 == 0 for s in members)
        assert sum(b1 ** s.b1_count * b2 ** s.b2_count for s in members) == (q + 1 / q) ** stats.loops
        assert Counter(s.winding for s in members) == expected_windings(stats.loops)


@pytest.mark.parametrize("m, n", [(1, 3), (2, 3), (3, 2)])
def test_every_edge_subset_is_realized(m, n, tilings):
    g = GridGraph(m, n)
    classes = class_partition(tilings(m, n))
    assert list(classes) == EdgeSubset.all_subsets(g)

def test_class_records(tilings):
    records = class_records(DomainSpec(1, 1), tilings(1, 1))
    assert records == [{"A": [], "k": 1, "loops": 1, "size": 2, "b_exponent_multiset": {"-4": 1, "4": 1}}]


def test_edge_subset_of_incomplete_tiling(tilings):
    t = tilings(1, 2)[0]
    junction = GridGraph(1, 2).edges[0].white
    dropped = next(tile for tile in t.tiles if tile.white == junction)
    kept = [tile for tile in t.tiles if tile is not dropped]
    with pytest.raises(TilingValidationError):
        edge_subset_of(Tiling.of(t.domain, kept))


def test_edge_subsets_are_distinct_across_classes(tilings):
    found = tilings(2, 2)
    subsets = {edge_subset_of(t) for t in found}
    assert len(subsets) == len(class_partition(found))
