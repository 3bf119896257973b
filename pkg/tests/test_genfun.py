from fractions import Fraction
import cmath
import math

import pytest

from services.errors import BoundaryWeightError, DomainError, ModeError, RangeError
from services.genfun import (
    FLIPPED,
    WeightSystem,
    b_type_weight_assignment,
    f_eval,
    reduced_a_products,
    summarize,
)
from services.lattice import DomainSpec, white_vertices
from services.scalars import ScalarMode


def _random_weights(rng, d):
    a = {}
    for w in white_vertices(d, interior=True):
        for o in (1, 2, 3, 4):
            a[(o, w)] = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    return WeightSystem(d, a, Fraction(rng.randint(1, 5), 3), Fraction(2, rng.randint(1, 5)))


def test_all_ones_counts_tilings(tilings):
    d = DomainSpec(2, 2)
    assert f_eval(d, WeightSystem.uniform(d), tilings=tilings(2, 2)) == 84


def test_pinwheels_give_q_plus_inverse():
    d = DomainSpec(1, 1)
    b1, b2 = b_type_weight_assignment(16)
    assert (b1, b2) == (2, Fraction(1, 2))
    assert f_eval(d, WeightSystem.uniform(d, b1=b1, b2=b2)) == 16 + Fraction(1, 16)


def test_flipped_chirality_swaps_b_weights():
    assert b_type_weight_assignment(Fraction(81, 16), FLIPPED) == (Fraction(2, 3), Fraction(3, 2))


def test_b_weights_need_rational_fourth_power():
    with pytest.raises(ModeError):
        b_type_weight_assignment(2)
    with pytest.raises(DomainError):
        b_type_weight_assignment(0)


def test_complex_b_weights():
    q = cmath.exp(1j * math.pi / 3)
    b1, b2 = b_type_weight_assignment(q, mode=ScalarMode.COMPLEX)
    assert abs(b1 * b2 - 1) < 1e-14
    assert abs(b1 ** 4 - q) < 1e-14


def test_boundary_weight_is_rejected():
    d = DomainSpec(1, 1)
    with pytest.raises(BoundaryWeightError):
        WeightSystem(d, {(1, (2, 0)): Fraction(3)})


def test_weight_key_must_be_white():
    d = DomainSpec(2, 2)
    with pytest.raises(RangeError):
        WeightSystem(d, {(1, (4, 4)): Fraction(3)})
    with pytest.raises(RangeError):
        WeightSystem(d, {(7, (4, 2)): Fraction(3)})


def test_mode_mismatch_is_rejected():
    d = DomainSpec(2, 2)
    with pytest.raises(ModeError):
        WeightSystem(d, {(1, (4, 2)): 1.5})
    with pytest.raises(ModeError):
        WeightSystem(d, {}, complex(1), complex(1), ScalarMode.EXACT)


def test_domain_mismatch(tilings):
    with pytest.raises(RangeError):
        f_eval(DomainSpec(2, 2), WeightSystem.uniform(DomainSpec(1, 1)))


def test_gauge_rescaling_leaves_f_unchanged(rng, tilings):
    d = DomainSpec(2, 2)
    found = tilings(2, 2)
    base = _random_weights(rng, d)
    expected = f_eval(d, base, tilings=found)
    interior = white_vertices(d, interior=True)
    for _ in range(50):
        w = rng.choice(interior)
        c = Fraction(rng.randint(1, 7), rng.randint(1, 7))
        a = dict(base.a)
        if rng.random() < 0.5:
            a[(1, w)], a[(3, w)] = a[(1, w)] * c, a[(3, w)] / c
        else:
            a[(2, w)], a[(4, w)] = a[(2, w)] * c, a[(4, w)] / c
        rescaled = WeightSystem(d, a, base.b1, base.b2)
        assert reduced_a_products(rescaled) == reduced_a_products(base)
        assert f_eval(d, rescaled, tilings=found) == expected


def test_complex_mode_matches_exact(rng, tilings):
    d = DomainSpec(1, 2)
    exact = _random_weights(rng, d)
    as_complex = WeightSystem(
        d, {k: complex(float(v)) for k, v in exact.a.items()},
        complex(float(exact.b1)), complex(float(exact.b2)), ScalarMode.COMPLEX,
    )
    assert f_eval(d, as_complex) == pytest.approx(complex(float(f_eval(d, exact))), rel=1e-12)


def test_summary_without_weights(tilings):
    s = summarize(tilings(1, 1)[0])
    assert s.a_product == 1
    assert s.b1_count + s.b2_count == 4
    assert abs(s.winding) == 1
