"""
Exhaustive enumeration of T-tetromino tilings.

Backtracking always branches on the lowest uncovered cell (row-major, bottom
row first) and tries orientations 1..4 in order, so the stream order is
canonical. With pruning on, placements that break the colouring rules are
never offered; with pruning off only exact cover is enforced and every
complete tiling is validated afterwards.
"""
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
import threading
import time

from services.errors import BudgetError, InvariantError, PlacementError, RangeError
from services.lattice import FIRST_CELL, ORIENTATIONS, DomainSpec, Tiling, place_tile, validate_tiling
from utils.logging_utils import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class EnumerationConfig:
    pruning: bool = True
    limit: int = None
    emit: str = "full-tilings"

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise RangeError(f"limit must be >= 1, got {self.limit}")
        if self.emit not in ("count-only", "full-tilings"):
            raise RangeError(f"emit must be 'count-only' or 'full-tilings', got {self.emit!r}")


def is_tileable(M, N):
    if M < 1 or N < 1:
        raise RangeError(f"rectangle sides must be positive, got {M}x{N}")
    return M % 4 == 0 and N % 4 == 0


@lru_cache(maxsize=32)
def _placements(d, pruning):
    """For each cell: the (tile, cell bitmask) pairs whose first cell is that cell, orientation order."""
    M = d.M
    table = []
    for j in range(d.N):
        for i in range(M):
            options = []
            for o in ORIENTATIONS:
                fi, fj = FIRST_CELL[o]
                anchor = (i - fi, j - fj)
                try:
                    tile = place_tile(o, anchor, d, strict=pruning)
                except (RangeError, PlacementError):
                    continue
                mask = 0
                for ci, cj in tile.cells:
                    mask |= 1 << (cj * M + ci)
                options.append((tile, mask))
            table.append(tuple(options))
    return tuple(table)


def _lowest_free(occupied, full):
    free = ~occupied & full
    return (free & -free).bit_length() - 1


def _search(table, full, occupied, chosen):
    if occupied == full:
        yield tuple(chosen)
        return
    cell = _lowest_free(occupied, full)
    for tile, mask in table[cell]:
        if occupied & mask:
            continue
        chosen.append(tile)
        yield from _search(table, full, occupied | mask, chosen)
        chosen.pop()


def _count(table, full, occupied):
    if occupied == full:
        return 1
    cell = _lowest_free(occupied, full)
    total = 0
    for _, mask in table[cell]:
        if not occupied & mask:
            total += _count(table, full, occupied | mask)
    return total


def _prefixes(table, full, depth):
    """Partial placements of the given depth, in canonical order."""
    frontier = [((), 0)]
    for _ in range(depth):
        nxt = []
        for tiles, occupied in frontier:
            if occupied == full:
                nxt.append((tiles, occupied))
                continue
            cell = _lowest_free(occupied, full)
            for tile, mask in table[cell]:
                if not occupied & mask:
                    nxt.append((tiles + (tile,), occupied | mask))
        frontier = nxt
    return frontier


def _finish(d, tiles, pruning):
    tiling = Tiling.of(d, tiles)
    if not pruning:
        report = validate_tiling(tiling)
        if not report.valid:
            raise InvariantError(f"exact cover of {d} breaks the colouring rules: {report.violations[0]}")
    return tiling


def _run_branch(table, full, prefix, limit):
    """All completions of one prefix, at most limit of them."""
    tiles, occupied = prefix
    return list(islice(_search(table, full, occupied, list(tiles)), limit))


def enumerate_tilings(d, cfg=None, threads=1, split_depth=2):
    """Yield every tiling of d once, in canonical order (stops after cfg.limit)."""
    cfg = cfg or EnumerationConfig()
    table = _placements(d, cfg.pruning)
    full = (1 << d.cell_count) - 1
    started = time.perf_counter()
    emitted = 0

    if threads > 1:
        queue = iter(_prefixes(table, full, split_depth))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # at most `threads` branches in flight, consumed in prefix (canonical) order
            pending = deque(pool.submit(_run_branch, table, full, p, cfg.limit) for p in islice(queue, threads))
            try:
                while pending:
                    found = pending.popleft().result()
                    nxt = next(queue, None)
                    if nxt is not None:
                        pending.append(pool.submit(_run_branch, table, full, nxt, cfg.limit))
                    for tiles in found:
                        yield _finish(d, tiles, cfg.pruning)
                        emitted += 1
                        if cfg.limit is not None and emitted >= cfg.limit:
                            return
            finally:
                for future in pending:
                    future.cancel()
    else:
        for tiles in _search(table, full, 0, []):
            yield _finish(d, tiles, cfg.pruning)
            emitted += 1
            if cfg.limit is not None and emitted >= cfg.limit:
                break
    logger.info("enumerated %d tilings of %s (pruning=%s) in %.2fs",
                emitted, d, cfg.pruning, time.perf_counter() - started)


def count_tilings(d, pruning=True, threads=1, split_depth=2):
    """Number of tilings; a (M, N) pair that is not 4m x 4n counts 0."""
    if isinstance(d, tuple):
        M, N = d
        if not is_tileable(M, N):
            return 0
        d = DomainSpec.from_size(M, N)
    table = _placements(d, pruning)
    full = (1 << d.cell_count) - 1
    started = time.perf_counter()
    if threads > 1:
        prefixes = _prefixes(table, full, split_depth)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(lambda p: _count(table, full, p[1]), prefixes))
    else:
        total = _count(table, full, 0)
    logger.info("counted %d tilings of %s in %.2fs", total, d, time.perf_counter() - started)
    return total


# Completed enumerations shared by genfun / cycles / correspondence.
tiling_cache = {}
tiling_cache_lock = threading.Lock()


def all_tilings(d, pruning=True, max_tilings=None):
    """Full (cached) tiling list for d; BudgetError past max_tilings."""
    key = (d, pruning)
    with tiling_cache_lock:
        cached = tiling_cache.get(key)
    if cached is not None:
        if max_tilings is not None and len(cached) > max_tilings:
            raise BudgetError(f"{d} has more than {max_tilings} tilings")
        return cached
    limit = None if max_tilings is None else max_tilings + 1
    tilings = tuple(enumerate_tilings(d, EnumerationConfig(pruning=pruning, limit=limit)))
    if max_tilings is not None and len(tilings) > max_tilings:
        raise BudgetError(f"{d} has more than {max_tilings} tilings")
    with tiling_cache_lock:
        tiling_cache[key] = tilings
    return tilings
