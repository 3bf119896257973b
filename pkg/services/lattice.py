"""
Lattice geometry for T-tetromino tilings of a 4m x 4n rectangle.

Cells are indexed (i, j) with 0 <= i < 4m, 0 <= j < 4n; lattice vertices (x, y)
sit at cell corners, 0 <= x <= 4m, 0 <= y <= 4n. Vertices with both coordinates
even are coloured: black when x + y = 0 (mod 4), white when x + y = 2 (mod 4).
A coloured vertex is odd when y = 0 (mod 4) and even when y = 2 (mod 4).

In a valid tiling no tile corner lands on a white vertex, and black vertices
are only ever touched by tile corners.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from services.errors import PlacementError, RangeError

ORIENTATIONS = (1, 2, 3, 4)

# Stem up, stem right, stem down, stem left. 1/3 have the flat (long) side
# horizontal, 2/4 vertical. Offsets are relative to the anchor cell, the
# lower-left cell of the bounding box.
TILE_CELLS = {
    1: ((0, 0), (1, 0), (2, 0), (1, 1)),
    2: ((0, 0), (0, 1), (0, 2), (1, 1)),
    3: ((0, 1), (1, 1), (2, 1), (1, 0)),
    4: ((1, 0), (1, 1), (1, 2), (0, 1)),
}

# The two cornerless vertices of the flat side, in the order met when walking
# the flat side with the tile on the left (left-to-right for orientation 1).
# Offsets are relative to the anchor cell's lower-left vertex.
TILE_CORNERLESS = {
    1: ((1, 0), (2, 0)),
    2: ((0, 2), (0, 1)),
    3: ((2, 2), (1, 2)),
    4: ((2, 1), (2, 2)),
}

TILE_BBOX = {1: (3, 2), 2: (2, 3), 3: (3, 2), 4: (2, 3)}

# Offset of the lowest row-major cell; the enumerator anchors tiles on it.
FIRST_CELL = {o: min(TILE_CELLS[o], key=lambda c: (c[1], c[0])) for o in ORIENTATIONS}


@dataclass(frozen=True)
class DomainSpec:
    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise RangeError(f"{name} must be a positive integer, got {v!r}")

    @property
    def M(self):
        return 4 * self.m

    @property
    def N(self):
        return 4 * self.n

    @property
    def cell_count(self):
        return self.M * self.N

    @property
    def tile_count(self):
        return 4 * self.m * self.n

    @classmethod
    def from_size(cls, M, N):
        if M < 1 or N < 1 or M % 4 or N % 4:
            raise RangeError(f"{M}x{N} is not a 4m x 4n rectangle")
        return cls(M // 4, N // 4)

    def contains_vertex(self, x, y):
        return 0 <= x <= self.M and 0 <= y <= self.N

    def contains_cell(self, i, j):
        return 0 <= i < self.M and 0 <= j < self.N

    def on_boundary(self, x, y):
        return x in (0, self.M) or y in (0, self.N)

    def __str__(self):
        return f"{self.M}x{self.N}"


class VertexClass(str, Enum):
    BLACK_ODD = "BlackOdd"
    BLACK_EVEN = "BlackEven"
    WHITE_ODD = "WhiteOdd"
    WHITE_EVEN = "WhiteEven"
    PLAIN = "Plain"

    @property
    def is_black(self):
        return self in (VertexClass.BLACK_ODD, VertexClass.BLACK_EVEN)

    @property
    def is_white(self):
        return self in (VertexClass.WHITE_ODD, VertexClass.WHITE_EVEN)


def _colour(x, y):
    if x % 2 or y % 2:
        return VertexClass.PLAIN
    odd = y % 4 == 0
    if (x + y) % 4 == 0:
        return VertexClass.BLACK_ODD if odd else VertexClass.BLACK_EVEN
    return VertexClass.WHITE_ODD if odd else VertexClass.WHITE_EVEN


def classify_vertex(x, y, d):
    if not d.contains_vertex(x, y):
        raise RangeError(f"vertex ({x},{y}) outside {d}")
    return _colour(x, y)


def white_vertices(d, interior=None):
    """White vertices in (y, x) order; interior=True/False filters on the boundary."""
    out = []
    for y in range(0, d.N + 1, 2):
        for x in range(0, d.M + 1, 2):
            if (x + y) % 4 != 2:
                continue
            if interior is not None and d.on_boundary(x, y) == interior:
                continue
            out.append((x, y))
    return out


@dataclass(frozen=True)
class Tile:
    orientation: int
    anchor: tuple
    cells: tuple = field(repr=False)
    vertices: frozenset = field(repr=False)
    corners: frozenset = field(repr=False)
    cornerless: tuple = field(repr=False)
    white: tuple = None
    b_type: int = None

    @property
    def long_side_horizontal(self):
        return self.orientation in (1, 3)

    @property
    def sort_key(self):
        return (self.anchor[1], self.anchor[0], self.orientation)


def _geometry(o, anchor):
    i, j = anchor
    cells = tuple((i + di, j + dj) for di, dj in TILE_CELLS[o])
    vertices = frozenset((ci + dx, cj + dy) for ci, cj in cells for dx in (0, 1) for dy in (0, 1))
    cornerless = tuple((i + dx, j + dy) for dx, dy in TILE_CORNERLESS[o])
    return cells, vertices, vertices.difference(cornerless), cornerless


def place_tile(o, anchor, d, strict=True):
    """Build a tile. strict=False skips the colouring rules (exact-cover search only)."""
    if o not in ORIENTATIONS:
        raise RangeError(f"orientation must be one of 1..4, got {o!r}")
    i, j = anchor
    w, h = TILE_BBOX[o]
    if i < 0 or j < 0 or i + w > d.M or j + h > d.N:
        raise RangeError(f"tile o={o} at ({i},{j}) does not fit in {d}")
    cells, vertices, corners, cornerless = _geometry(o, (i, j))
    whites = [pos for pos, v in enumerate(cornerless) if _colour(*v).is_white]
    white, b_type = None, None
    if len(whites) == 1:
        white, b_type = cornerless[whites[0]], whites[0] + 1
    if strict:
        bad = sorted(v for v in corners if _colour(*v).is_white)
        if bad:
            raise PlacementError(f"tile o={o} at ({i},{j}) has a corner on white vertex {bad[0]}", o, (i, j))
        if white is None:
            raise PlacementError(f"tile o={o} at ({i},{j}) has no white cornerless vertex", o, (i, j))
    return Tile(o, (i, j), cells, vertices, corners, cornerless, white, b_type)


@dataclass(frozen=True)
class Tiling:
    domain: DomainSpec
    tiles: tuple

    @classmethod
    def of(cls, domain, tiles):
        return cls(domain, tuple(sorted(tiles, key=lambda t: t.sort_key)))

    @cached_property
    def b_counts(self):
        b1 = sum(1 for t in self.tiles if t.b_type == 1)
        b2 = sum(1 for t in self.tiles if t.b_type == 2)
        return b1, b2

    @property
    def winding(self):
        """Signed number of cycle orientations: (B1 - B2) / 4."""
        b1, b2 = self.b_counts
        return (b1 - b2) // 4

    def key(self):
        return tuple((t.orientation, t.anchor) for t in self.tiles)


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def valid(self):
        return not self.violations

    def kinds(self):
        return sorted({v.kind for v in self.violations})


def validate_tiling(t):
    d = t.domain
    violations = []
    cover = {}
    for idx, tile in enumerate(t.tiles):
        for c in tile.cells:
            if not d.contains_cell(*c):
                violations.append(Violation("out_of_bounds", c, f"tile {idx}"))
                continue
            cover.setdefault(c, []).append(idx)
    for j in range(d.N):
        for i in range(d.M):
            hits = cover.get((i, j), [])
            if not hits:
                violations.append(Violation("uncovered", (i, j)))
            elif len(hits) > 1:
                violations.append(Violation("double_cover", (i, j), f"tiles {hits}"))

    for idx, tile in enumerate(t.tiles):
        for v in sorted(tile.corners):
            if d.contains_vertex(*v) and _colour(*v).is_white:
                violations.append(Violation("corner_on_white", v, f"tile {idx}"))
        for v in tile.cornerless:
            if d.contains_vertex(*v) and _colour(*v).is_black:
                violations.append(Violation("black_not_corner", v, f"tile {idx}"))
        if tile.white is None:
            violations.append(Violation("no_white", tile.anchor, f"tile {idx} o={tile.orientation}"))

    b1, b2 = t.b_counts
    if len(t.tiles) != d.tile_count:
        violations.append(Violation("tile_count", (len(t.tiles),), f"expected {d.tile_count}"))
    if b1 + b2 != d.tile_count:
        violations.append(Violation("b_count", (b1, b2), f"B1+B2 != {d.tile_count}"))
    return ValidationReport(tuple(violations))
