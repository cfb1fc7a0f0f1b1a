import random

import pytest

from src.exceptions import (
    ArityMismatchError,
    ExponentOverflowError,
    NotPrimeError,
    NotPrimePowerError,
    PolynomialSyntaxError,
    UnknownIdentifierError,
)
from src.poly import (
    Monomial,
    PolyZ,
    expand_juxtaposition,
    frobenius_power,
    grevlex_cmp,
    parse_poly,
    parse_poly_mod_p,
    partial_derivative,
    reduce_mod_p,
    split_generators,
)

XYZW = ("X", "Y", "Z", "W")


def _random_poly(rng: random.Random, variables: tuple[str, ...]) -> PolyZ:
    terms = {}
    for _ in range(rng.randint(0, 5)):
        mono = tuple(rng.randint(0, 3) for _ in variables)
        terms[mono] = rng.randint(-20, 20)
    return PolyZ(terms, variables)


def test_parse_binomial() -> None:
    f = parse_poly("X*Y - Z*W", XYZW)

    assert dict(f.terms) == {(1, 1, 0, 0): 1, (0, 0, 1, 1): -1}


def test_parse_power_expands() -> None:
    assert parse_poly("(X+Y)^2", ["X", "Y"]) == parse_poly("X^2 + 2*X*Y + Y^2", ["X", "Y"])


def test_parse_constant_term() -> None:
    f = parse_poly("X^2*Y + 3", ["X", "Y"])

    assert len(f) == 2
    assert f.terms[(0, 0)] == 3
    assert f.terms[(2, 1)] == 1


def test_parse_is_whitespace_insensitive() -> None:
    assert parse_poly(" X ^ 2 *Y+3 ", ["X", "Y"]) == parse_poly("X^2*Y+3", ["X", "Y"])


def test_parse_errors_carry_position() -> None:
    with pytest.raises(PolynomialSyntaxError) as missing_operand:
        parse_poly("X*+Y", ["X", "Y"])
    assert missing_operand.value.position == 2

    with pytest.raises(PolynomialSyntaxError) as unclosed:
        parse_poly("(X+Y", ["X", "Y"])
    assert unclosed.value.position == 4


def test_parse_rejects_implicit_multiplication() -> None:
    with pytest.raises(PolynomialSyntaxError) as excinfo:
        parse_poly("2X", ["X"])

    assert excinfo.value.position == 1
    assert "implicit" in str(excinfo.value)


def test_parse_unknown_identifier() -> None:
    with pytest.raises(UnknownIdentifierError) as excinfo:
        parse_poly("X + Q", ["X", "Y"])

    assert excinfo.value.position == 4


def test_print_then_parse_returns_same_polynomial() -> None:
    rng = random.Random(20240611)
    variables = ("X", "Y", "Z")

    for _ in range(1000):
        f = _random_poly(rng, variables)
        assert parse_poly(str(f), variables) == f


def test_command_line_shorthand() -> None:
    assert expand_juxtaposition("XY-ZW", XYZW) == "X*Y-Z*W"
    assert expand_juxtaposition("2X(Y+Z)", XYZW) == "2*X*(Y+Z)"
    assert split_generators("X, (Y+Z)^2,W") == ["X", "(Y+Z)^2", "W"]


def test_grevlex_comparisons() -> None:
    assert grevlex_cmp(Monomial.of(1, 1, 0, 0), Monomial.of(0, 0, 1, 1)) == 1
    assert grevlex_cmp(Monomial.of(2, 0), Monomial.of(1, 1)) == 1
    assert grevlex_cmp(Monomial.of(0, 3), Monomial.of(1, 1)) == 1
    assert grevlex_cmp(Monomial.of(1, 2), Monomial.of(1, 2)) == 0


def test_grevlex_arity_mismatch() -> None:
    with pytest.raises(ArityMismatchError):
        grevlex_cmp(Monomial.of(1, 0), Monomial.of(1, 0, 0))


def test_exponent_overflow_is_checked() -> None:
    with pytest.raises(ExponentOverflowError):
        Monomial.of(2 ** 32, 0)


def test_product_exponent_overflow_is_checked() -> None:
    half = PolyZ({(2 ** 31,): 1}, ("x",))

    with pytest.raises(ExponentOverflowError):
        half ** 2
    with pytest.raises(ExponentOverflowError):
        half * PolyZ({(0,): 3, (2 ** 31,): 1}, ("x",))
    with pytest.raises(ExponentOverflowError):
        half.mul_term((2 ** 31,))
    assert half * PolyZ({(2 ** 31 - 1,): 2}, ("x",)) == PolyZ({(2 ** 32 - 1,): 2}, ("x",))


def test_reduce_mod_p() -> None:
    square = parse_poly("(X+Y)^2", ["X", "Y"])

    assert reduce_mod_p(square, 2) == parse_poly_mod_p("X^2 + Y^2", ["X", "Y"], 2)
    assert reduce_mod_p(parse_poly("3*X", ["X"]), 3).is_zero()


def test_reduce_mod_p_rejects_composite() -> None:
    with pytest.raises(NotPrimeError):
        reduce_mod_p(parse_poly("X", ["X"]), 4)
    with pytest.raises(NotPrimeError):
        reduce_mod_p(parse_poly("X", ["X"]), 2 ** 62 + 135)


def test_large_prime_modulus() -> None:
    f = reduce_mod_p(parse_poly("578193147734*X + 1", ["X"]), 578193147733)

    assert f == parse_poly_mod_p("X + 1", ["X"], 578193147733)


def test_frobenius_power() -> None:
    xy = ["X", "Y"]

    assert frobenius_power([parse_poly_mod_p("X+Y", xy, 2)], 2) == [parse_poly_mod_p("X^2+Y^2", xy, 2)]
    assert frobenius_power([parse_poly_mod_p("X*Y", xy, 2)], 4) == [parse_poly_mod_p("X^4*Y^4", xy, 2)]
    assert frobenius_power([parse_poly_mod_p("X+Y", xy, 3)], 3) == [parse_poly_mod_p("X^3+Y^3", xy, 3)]
    assert frobenius_power([parse_poly_mod_p("X+Y", xy, 3)], 1) == [parse_poly_mod_p("X+Y", xy, 3)]


def test_frobenius_power_rejects_foreign_q() -> None:
    with pytest.raises(NotPrimePowerError):
        frobenius_power([parse_poly_mod_p("X+Y", ["X", "Y"], 2)], 3)


def test_partial_derivatives() -> None:
    assert partial_derivative(parse_poly("X^3*Z", XYZW), 0) == parse_poly("3*X^2*Z", XYZW)
    assert partial_derivative(parse_poly_mod_p("X^5", ["X"], 5), 0).is_zero()
    assert partial_derivative(parse_poly("X*Y - Z*W", XYZW), 3) == parse_poly("-Z", XYZW)


def test_ring_arithmetic() -> None:
    f = parse_poly("X + 1", ["X"])

    assert f ** 3 == parse_poly("X^3 + 3*X^2 + 3*X + 1", ["X"])
    assert (f - f).is_zero()
    assert 2 * f == parse_poly("2*X + 2", ["X"])
    assert parse_poly("X^2 + X*Y", ["X", "Y"]).is_homogeneous(2)
    assert not f.is_homogeneous()
    assert f.total_degree() == 1


def test_mixed_rings_are_rejected() -> None:
    with pytest.raises(ArityMismatchError):
        parse_poly("X", ["X"]) + parse_poly("X", ["X", "Y"])
    with pytest.raises(ArityMismatchError):
        parse_poly_mod_p("X", ["X"], 2) * parse_poly_mod_p("X", ["X"], 3)
