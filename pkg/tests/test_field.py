"""Exact arithmetic in the radical field generated by sqrt 2, 3, 5."""

import math
import random

import pytest

from coxabs.field import (
    HALF,
    ONE,
    SQRT2,
    SQRT3,
    SQRT5,
    ZERO,
    FieldScalar,
    cos_pi_over,
)


def rational(num, den=1):
    return FieldScalar.from_rational(num, den)


def test_rational_round_trip():
    x = rational(3, 7)
    assert x.is_rational
    assert x.rational_part == rational(3, 7).rational_part
    assert float(x) == pytest.approx(3 / 7)


def test_constants():
    assert ZERO.is_zero
    assert ONE - HALF == HALF
    assert float(SQRT2) == pytest.approx(math.sqrt(2))
    assert float(SQRT3) == pytest.approx(math.sqrt(3))
    assert float(SQRT5) == pytest.approx(math.sqrt(5))


def test_golden_ratio_sums():
    # (1+sqrt5)/4 + (sqrt5-1)/4 = sqrt5/2
    a = (ONE + SQRT5) / 4
    b = (SQRT5 - ONE) / 4
    assert a + b == SQRT5 / 2
    # ((1+sqrt5)/4)^2 = (3+sqrt5)/8
    assert a * a == (rational(3) + SQRT5) / 8


def test_radical_products_fold():
    # sqrt6 * sqrt10 = 2 sqrt15
    sqrt6 = SQRT2 * SQRT3
    sqrt10 = SQRT2 * SQRT5
    assert sqrt6 * sqrt10 == rational(2) * SQRT3 * SQRT5
    assert SQRT2 * SQRT2 == rational(2)
    assert SQRT3 * SQRT3 == rational(3)
    assert SQRT5 * SQRT5 == rational(5)


def test_inversion():
    x = ONE + SQRT5
    assert x.invert() == (SQRT5 - ONE) / 4
    assert x * x.invert() == ONE
    y = SQRT2 + SQRT3 - SQRT5
    assert y * y.invert() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.invert()


def test_sign_of_tight_combination():
    # sqrt2 + sqrt3 - sqrt5 - 1/2 is about 0.4,
    # small enough to punish sloppy precision handling
    x = SQRT2 + SQRT3 - SQRT5 - HALF
    assert x.sign() == 1
    assert (-x).sign() == -1
    assert (x - x).sign() == 0
    assert x > ZERO


def test_cos_pi_over_table():
    assert cos_pi_over(2) == ZERO
    assert cos_pi_over(3) == HALF
    assert cos_pi_over(4) == SQRT2 / 2
    assert cos_pi_over(5) == (ONE + SQRT5) / 4
    assert cos_pi_over(6) == SQRT3 / 2


def test_cos_pi_over_rejects_out_of_field_bonds():
    with pytest.raises(Exception):
        cos_pi_over(7)


def test_comparison_matches_floats():
    rng = random.Random(11)
    values = [ZERO, ONE, HALF, SQRT2, SQRT3, SQRT5]
    for _ in range(200):
        x = values[rng.randrange(len(values))] - values[rng.randrange(len(values))]
        y = values[rng.randrange(len(values))] / rng.randint(1, 3)
        if abs(float(x) - float(y)) > 1e-9:
            assert (x < y) == (float(x) < float(y))


def test_coerce_accepts_ints_and_scalars():
    assert FieldScalar.coerce(2) == rational(2)
    assert FieldScalar.coerce(SQRT2) is SQRT2
    assert rational(1, 2) + 1 == rational(3, 2)
    assert 2 * SQRT2 == SQRT2 + SQRT2


def test_hash_consistent_with_eq():
    assert hash(ONE + ONE) == hash(rational(2))
    assert len({SQRT2 / 2, cos_pi_over(4)}) == 1
