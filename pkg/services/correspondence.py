"""
The tiling / Potts identity

    Q^(mn/2) F_D({a}, {b}) = Z_G(Q, v),   Q = (q + 1/q)^2,  v_e = (q + 1/q) x_e

checked by evaluating both sides independently. Q^(mn/2) is taken as
(q + 1/q)^(mn), so no square root is ever formed.
"""
from dataclasses import dataclass, field
import time

from services.cycles import GridGraph
from services.enumeration import all_tilings
from services.errors import DomainError, RangeError
from services.genfun import STANDARD, WeightSystem, b_type_weight_assignment, f_eval
from services.lattice import DomainSpec
from services.scalars import ScalarMode, coerce, one, relative_residual
from services.tutte import PottsPoint, grid_graph, z_delcon, z_subset
from utils.logging_utils import setup_logger

logger = setup_logger(__name__)

COMPLEX_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CorrespondenceParams:
    q: object
    x: dict = field(default_factory=dict)
    mode: ScalarMode = ScalarMode.EXACT

    def __post_init__(self):
        q = coerce(self.q, self.mode)
        if q == 0:
            raise DomainError("q must be non-zero")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "x", {int(e): coerce(v, self.mode) for e, v in self.x.items()})

    @property
    def sqrt_Q(self):
        return self.q + 1 / self.q

    @property
    def Q(self):
        return self.sqrt_Q ** 2

    def x_e(self, e):
        return self.x.get(e, one(self.mode))

    def v(self, g):
        for e in self.x:
            if not 0 <= e < g.edge_count:
                raise RangeError(f"x given for edge {e}, graph has {g.edge_count} edges")
        return tuple(self.sqrt_Q * self.x_e(e.index) for e in g.edges)

    @classmethod
    def uniform(cls, q, x_value, g, mode=ScalarMode.EXACT):
        return cls(q, {e.index: x_value for e in g.edges}, mode)


def potts_weight_system(g, params, chirality=STANDARD, gauge="a1"):
    """a1*a3 = x_e on horizontal-edge whites, a2*a4 = x_e on vertical-edge whites, b from q."""
    if gauge not in ("a1", "a3"):
        raise RangeError(f"gauge must be 'a1' or 'a3', got {gauge!r}")
    a = {}
    for e in g.edges:
        x = params.x_e(e.index)
        if x == 1:
            continue
        if e.horizontal:
            o = 1 if gauge == "a1" else 3
        else:
            o = 2 if gauge == "a1" else 4
        a[(o, e.white)] = x
    b1, b2 = b_type_weight_assignment(params.q, chirality, params.mode)
    return WeightSystem(g.domain, a, b1, b2, ScalarMode(params.mode))


@dataclass(frozen=True)
class IdentityReport:
    m: int
    n: int
    mode: str
    Q: object
    lhs: object
    rhs: object
    rhs_delcon: object
    equal: bool
    residual: float
    f_value: object
    elapsed: float


def verify_theorem2(m, n, params, mode=None, tilings=None, max_tilings=None, chirality=STANDARD, gauge="a1"):
    mode = ScalarMode(mode or params.mode)
    if mode is not ScalarMode(params.mode):
        raise RangeError(f"params are {ScalarMode(params.mode).value}, verification asked for {mode.value}")
    started = time.perf_counter()
    d = DomainSpec(m, n)
    g = GridGraph(m, n)
    weights = potts_weight_system(g, params, chirality, gauge)
    if tilings is None:
        tilings = all_tilings(d, max_tilings=max_tilings)
    f_value = f_eval(d, weights, tilings=tilings)
    lhs = params.sqrt_Q ** (m * n) * f_value

    graph = grid_graph(m, n, params.v(g))
    point = PottsPoint(params.Q)
    rhs = z_subset(graph, point)
    rhs_delcon = z_delcon(graph, point)
    residual = relative_residual(lhs, rhs)
    if mode is ScalarMode.EXACT:
        equal = lhs == rhs and rhs == rhs_delcon
    else:
        equal = residual < COMPLEX_TOLERANCE and relative_residual(rhs_delcon, rhs) < COMPLEX_TOLERANCE
    report = IdentityReport(m, n, mode.value, params.Q, lhs, rhs, rhs_delcon, equal,
                            float(residual), f_value, time.perf_counter() - started)
    logger.info("identity %dx%d (%s): equal=%s residual=%.3g", m, n, mode.value, equal, report.residual)
    return report


def korn_pak_reduction(m, n, tilings=None):
    """With q = 1 and x = 1 the identity reads 2^(mn) * count = Z_G(4, 2) = 4 * 2^(mn-1) * T_G(3, 3)."""
    g = GridGraph(m, n)
    report = verify_theorem2(m, n, CorrespondenceParams.uniform(1, 1, g), tilings=tilings)
    return report.f_value, report.rhs / (4 * 2 ** (m * n - 1)), report.equal
