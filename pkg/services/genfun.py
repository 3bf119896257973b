"""
Weight systems and the tiling generating function

    F_D = sum over tilings T of  prod_t a[o(t), w(t)]  *  b1**B1 * b2**B2

where w(t) is the white vertex on the tile's flat side and B_j counts tiles of
b-type j. a-weights on boundary white vertices are fixed to 1.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from services.enumeration import all_tilings
from services.errors import BoundaryWeightError, DomainError, ModeError, RangeError
from services.lattice import ORIENTATIONS, white_vertices
from services.scalars import (
    ScalarMode,
    coerce,
    common_mode,
    mode_of,
    one,
    principal_root,
    rational_fourth_root,
    zero,
)
from utils.logging_utils import setup_logger

logger = setup_logger(__name__)

STANDARD = "standard"
FLIPPED = "flipped"


@dataclass(frozen=True)
class WeightSystem:
    domain: object
    a: dict = field(default_factory=dict)
    b1: object = Fraction(1)
    b2: object = Fraction(1)
    mode: ScalarMode = ScalarMode.EXACT

    def __post_init__(self):
        d = self.domain
        for (o, w), value in self.a.items():
            if o not in ORIENTATIONS:
                raise RangeError(f"a-weight orientation must be 1..4, got {o!r}")
            x, y = w
            if not d.contains_vertex(x, y) or x % 2 or y % 2 or (x + y) % 4 != 2:
                raise RangeError(f"a-weight key {w} is not a white vertex of {d}")
            if d.on_boundary(x, y):
                raise BoundaryWeightError(
                    f"a-weight at boundary white vertex {w}: boundary tiles have a fixed "
                    f"orientation, so their a-weights are normalised to 1")
        declared = ScalarMode(self.mode)
        for value in (*self.a.values(), self.b1, self.b2):
            if mode_of(value) is not declared:
                raise ModeError(f"{value!r} is not a {declared.value} scalar")

    @classmethod
    def uniform(cls, domain, mode=ScalarMode.EXACT, b1=None, b2=None):
        unit = one(mode)
        return cls(domain, {}, unit if b1 is None else b1, unit if b2 is None else b2, ScalarMode(mode))

    def weight(self, o, w):
        return self.a.get((o, w), one(self.mode))


@dataclass(frozen=True)
class TilingWeightSummary:
    a_product: object
    b1_count: int
    b2_count: int

    @property
    def winding(self):
        return (self.b1_count - self.b2_count) // 4


def summarize(tiling, weights=None):
    b1, b2 = tiling.b_counts
    if weights is None:
        return TilingWeightSummary(Fraction(1), b1, b2)
    prod = one(weights.mode)
    if weights.a:
        for t in tiling.tiles:
            prod *= weights.weight(t.orientation, t.white)
    return TilingWeightSummary(prod, b1, b2)


def _b_factor(weights, b1_count, b2_count):
    return weights.b1 ** b1_count * weights.b2 ** b2_count


def f_eval(d, w, tilings=None, max_tilings=None):
    """Evaluate F_D at the weights w. Pass tilings to reuse an enumeration."""
    if w.domain != d:
        raise RangeError(f"weight system is for {w.domain}, not {d}")
    if tilings is None:
        tilings = all_tilings(d, max_tilings=max_tilings)
    total = zero(w.mode)
    for tiling in tilings:
        s = summarize(tiling, w)
        total += s.a_product * _b_factor(w, s.b1_count, s.b2_count)
    return total


def reduced_a_products(w):
    """Per interior white vertex: (a1*a3, a2*a4). F depends on a only through these."""
    out = {}
    for v in white_vertices(w.domain, interior=True):
        out[v] = (w.weight(1, v) * w.weight(3, v), w.weight(2, v) * w.weight(4, v))
    return out


def b_type_weight_assignment(q, chirality=STANDARD, mode=None):
    """(b1, b2) = (q**(1/4), q**(-1/4)), swapped when chirality is flipped."""
    if chirality not in (STANDARD, FLIPPED):
        raise RangeError(f"chirality must be '{STANDARD}' or '{FLIPPED}', got {chirality!r}")
    mode = ScalarMode(mode) if mode is not None else common_mode([q])
    q = coerce(q, mode)
    if q == 0:
        raise DomainError("q must be invertible")
    if mode is ScalarMode.EXACT:
        root = rational_fourth_root(q)
        pair = (root, 1 / root)
    else:
        root = principal_root(q, 4)
        pair = (root, 1 / root)
    if chirality == FLIPPED:
        pair = pair[::-1]
    return pair
