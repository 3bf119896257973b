from collections import Counter

import pytest
from hypothesis import given, strategies as st

from services.errors import PlacementError, RangeError
from services.lattice import (
    ORIENTATIONS,
    DomainSpec,
    Tiling,
    VertexClass,
    classify_vertex,
    place_tile,
    validate_tiling,
    white_vertices,
)


def test_domain_sizes():
    d = DomainSpec(2, 3)
    assert (d.M, d.N, d.cell_count, d.tile_count) == (8, 12, 96, 24)
    assert str(d) == "8x12"
    assert DomainSpec.from_size(8, 12) == d


@pytest.mark.parametrize("m, n", [(0, 1), (1, 0), (-1, 2)])
def test_domain_rejects_non_positive(m, n):
    with pytest.raises(RangeError):
        DomainSpec(m, n)


def test_from_size_rejects_non_multiples():
    with pytest.raises(RangeError):
        DomainSpec.from_size(6, 8)


@pytest.mark.parametrize("x, y, expected", [
    (0, 0, VertexClass.BLACK_ODD),
    (2, 2, VertexClass.BLACK_EVEN),
    (2, 0, VertexClass.WHITE_ODD),
    (0, 2, VertexClass.WHITE_EVEN),
    (4, 2, VertexClass.WHITE_EVEN),
    (1, 0, VertexClass.PLAIN),
    (3, 3, VertexClass.PLAIN),
])
def test_classify_vertex(x, y, expected):
    assert classify_vertex(x, y, DomainSpec(1, 1)) is expected


def test_classify_vertex_out_of_range():
    with pytest.raises(RangeError):
        classify_vertex(5, 0, DomainSpec(1, 1))


def test_white_vertices_of_smallest_square_are_all_on_the_boundary():
    d = DomainSpec(1, 1)
    assert sorted(white_vertices(d)) == [(0, 2), (2, 0), (2, 4), (4, 2)]
    assert list(white_vertices(d, interior=True)) == []


@given(st.integers(1, 5), st.integers(1, 5))
def test_interior_whites_match_grid_edges(m, n):
    # WhiteEven sit on horizontal edges, WhiteOdd on vertical ones
    d = DomainSpec(m, n)
    kinds = Counter(classify_vertex(x, y, d) for x, y in white_vertices(d, interior=True))
    assert kinds[VertexClass.WHITE_EVEN] == (m - 1) * n
    assert kinds[VertexClass.WHITE_ODD] == m * (n - 1)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 3), (2, 2), (3, 2), (4, 5)])
def test_boundary_colours(m, n):
    d = DomainSpec(m, n)
    boundary = [(x, y) for y in range(0, d.N + 1, 2) for x in range(0, d.M + 1, 2) if d.on_boundary(x, y)]
    for x, y in boundary:
        kind = classify_vertex(x, y, d)
        if kind.is_black:
            assert kind is VertexClass.BLACK_ODD
        elif y in (0, d.N):
            assert kind is VertexClass.WHITE_ODD
        else:
            assert x in (0, d.M)
            assert kind is VertexClass.WHITE_EVEN
    assert sum(classify_vertex(x, y, d).is_white for x, y in boundary) == 2 * (m + n)


def test_place_tile_records_white_and_b_type():
    d = DomainSpec(1, 1)
    t = place_tile(1, (0, 0), d)
    assert t.white == (2, 0)
    assert t.b_type == 2
    assert t.long_side_horizontal
    assert len(t.vertices) == 10
    assert len(t.corners) == 8
    shifted = place_tile(1, (1, 0), d)
    assert shifted.white == (2, 0)
    assert shifted.b_type == 1


def test_place_tile_without_white_on_flat_side():
    with pytest.raises(PlacementError) as info:
        place_tile(1, (0, 1), DomainSpec(1, 1))
    assert info.value.orientation == 1
    assert info.value.anchor == (0, 1)


def test_place_tile_corner_on_white():
    with pytest.raises(PlacementError, match="corner on white"):
        place_tile(1, (1, 1), DomainSpec(1, 1))


def test_place_tile_out_of_bounds():
    with pytest.raises(RangeError):
        place_tile(1, (2, 0), DomainSpec(1, 1))
    with pytest.raises(RangeError):
        place_tile(5, (0, 0), DomainSpec(1, 1))


def test_lenient_placement_is_caught_by_validation():
    d = DomainSpec(1, 1)
    bad = place_tile(1, (1, 1), d, strict=False)
    report = validate_tiling(Tiling.of(d, [bad]))
    assert not report.valid
    assert {"corner_on_white", "no_white", "uncovered", "tile_count"} <= set(report.kinds())


def test_enumerated_pinwheels(tilings):
    found = tilings(1, 1)
    assert len(found) == 2
    assert sorted(t.b_counts for t in found) == [(0, 4), (4, 0)]
    assert sorted(t.winding for t in found) == [-1, 1]
    for t in found:
        assert validate_tiling(t).valid


def test_missing_tile_is_reported(tilings):
    t = tilings(1, 1)[0]
    partial = Tiling.of(t.domain, t.tiles[1:])
    report = validate_tiling(partial)
    assert report.kinds() == ["b_count", "tile_count", "uncovered"]
    assert len([v for v in report.violations if v.kind == "uncovered"]) == 4


def test_overlapping_tiles_are_reported(tilings):
    t = tilings(1, 1)[0]
    doubled = Tiling.of(t.domain, t.tiles + t.tiles[:1])
    assert "double_cover" in validate_tiling(doubled).kinds()


def test_tiling_order_is_canonical(tilings):
    t = tilings(2, 2)[0]
    keys = [tile.sort_key for tile in t.tiles]
    assert keys == sorted(keys)
    assert Tiling.of(t.domain, reversed(t.tiles)) == t


@pytest.mark.parametrize("o", ORIENTATIONS)
def test_every_orientation_places_somewhere(o):
    d = DomainSpec(2, 2)
    placed = []
    for i in range(d.M):
        for j in range(d.N):
            try:
                placed.append(place_tile(o, (i, j), d))
            except (RangeError, PlacementError):
                continue
    assert placed
    assert all(t.b_type in (1, 2) for t in placed)
