import random
from fractions import Fraction

import pytest
from mpmath import iv

from src.arith import (
    NegativeDiscriminantError,
    QuadNum,
    parse_quadnum,
    quad_ceil,
    quad_floor,
    quad_sign,
    solve_quadratic,
    squarefree_decomposition,
)
from src.exceptions import RadicandMismatchError


def _golden() -> QuadNum:
    return QuadNum(Fraction(1, 2), Fraction(1, 2), 5)


def _random_quad(rng: random.Random) -> QuadNum:
    a = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    b = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    return QuadNum(a, b, 5)


def _interval_sign(x: QuadNum) -> int:
    """Sign from a 128-bit interval enclosure; 0 when the enclosure straddles zero"""
    saved = iv.prec
    iv.prec = 128
    try:
        value = iv.mpf(x.a.numerator) / x.a.denominator + iv.mpf(x.b.numerator) / x.b.denominator * iv.sqrt(x.d)
    finally:
        iv.prec = saved
    if value.a > 0:
        return 1
    if value.b < 0:
        return -1
    return 0


def test_golden_ratio_square_is_phi_plus_one() -> None:
    phi = _golden()

    assert phi ** 2 == QuadNum(Fraction(3, 2), Fraction(1, 2), 5)
    assert phi ** 2 == phi + 1


def test_norm_form_is_rational() -> None:
    x = QuadNum(3, 2, 5)

    product = x * x.conjugate()

    assert product == -11
    assert product.is_rational()
    assert x.norm() == -11


def test_cancellation_to_integer() -> None:
    left = QuadNum(Fraction(3, 2), Fraction(-1, 2), 5)
    right = QuadNum(Fraction(-1, 2), Fraction(1, 2), 5)

    assert left + right == 1


def test_radicand_mismatch_raises() -> None:
    with pytest.raises(RadicandMismatchError):
        QuadNum(0, 1, 2) + QuadNum(0, 1, 3)


def test_rational_operand_adopts_other_radicand() -> None:
    assert QuadNum.rational(2, 3) + QuadNum(0, 1, 5) == QuadNum(2, 1, 5)


def test_division_by_zero_raises() -> None:
    with pytest.raises(ZeroDivisionError):
        _golden() / QuadNum.rational(0)


def test_division_round_trips() -> None:
    x = QuadNum(Fraction(7, 3), Fraction(-2, 5), 5)
    y = _golden()

    assert (x / y) * y == x


def test_radicand_is_made_squarefree() -> None:
    assert QuadNum(0, 1, 8) == QuadNum(0, 2, 2)
    assert QuadNum(1, 1, 4) == 3
    assert squarefree_decomposition(72) == (6, 2)


def test_rationals_ignore_radicand_in_equality() -> None:
    assert QuadNum.rational(1, 2) == QuadNum.rational(1, 3)
    assert hash(QuadNum.rational(1, 2)) == hash(QuadNum.rational(1, 3))


def test_quad_sign_opposite_components() -> None:
    assert quad_sign(QuadNum(3, -1, 5)) == 1
    assert quad_sign(QuadNum(2, -1, 5)) == -1
    assert quad_sign(QuadNum(-2, 1, 5)) == 1
    assert quad_sign(QuadNum(0, 0, 5)) == 0


def test_ordering_is_total_and_exact() -> None:
    phi = _golden()
    values = [phi, QuadNum.rational(2), QuadNum(Fraction(3, 2), Fraction(-1, 2), 5), QuadNum.rational(-1)]

    assert sorted(values) == [values[3], values[2], values[0], values[1]]
    assert phi > Fraction(1618, 1000)
    assert phi < Fraction(1619, 1000)


def test_floor_and_ceil() -> None:
    phi = _golden()

    assert quad_floor(phi) == 1
    assert quad_floor(-phi) == -2
    assert quad_floor(QuadNum(0, 1000, 2)) == 1414
    assert quad_ceil(QuadNum(Fraction(3, 2), Fraction(-1, 2), 5)) == 1
    assert quad_floor(QuadNum.rational(Fraction(-7, 2))) == -4


def test_solve_quadratic_golden_roots() -> None:
    lower, upper = solve_quadratic(-4, 4, 4)

    assert lower == QuadNum(Fraction(1, 2), Fraction(-1, 2), 5)
    assert upper == _golden()


def test_solve_quadratic_rational_roots() -> None:
    lower, upper = solve_quadratic(1, -3, 2)

    assert (lower, upper) == (QuadNum.rational(1), QuadNum.rational(2))


def test_solve_quadratic_errors() -> None:
    with pytest.raises(NegativeDiscriminantError):
        solve_quadratic(1, 0, 1)
    with pytest.raises(ValueError):
        solve_quadratic(0, 1, 1)


def test_display_parses_back() -> None:
    for value in (_golden(), QuadNum(Fraction(3, 2), Fraction(-1, 2), 5), QuadNum.rational(Fraction(-7, 3))):
        assert parse_quadnum(str(value)) == value


def test_to_decimal_digits() -> None:
    assert _golden().to_decimal(20).startswith("1.6180339887498948")


# MARK: - Random checks


def test_field_axioms_on_random_triples() -> None:
    rng = random.Random(20240611)

    for _ in range(1000):
        x, y, z = _random_quad(rng), _random_quad(rng), _random_quad(rng)
        assert (x * y) * z == x * (y * z)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        if x != 0:
            assert x * x.inverse() == 1


def test_quad_sign_agrees_with_interval_evaluation() -> None:
    rng = random.Random(7)

    for _ in range(1000):
        x = _random_quad(rng)
        if x == 0:
            assert quad_sign(x) == 0
            continue
        assert quad_sign(x) == _interval_sign(x)
        assert quad_sign(x) * quad_sign(-x) == -1


def test_floor_of_scaled_conjugate() -> None:
    assert quad_floor(QuadNum(3, -1, 5) * 5) == 3
