import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orenak import (
    ParseError,
    Polynomial,
    default_names,
    format_ore,
    format_poly,
    format_ratfunc,
    parse_poly,
)

from instances import q_scaling, random_poly

z1 = Polynomial.variable(2, 0)
z2 = Polynomial.variable(2, 1)
NAMES = ["z1", "z2"]


def parse2(text):
    return parse_poly(text, NAMES)


# --------------------------------------------------------------------- parsing


def test_parse_simple_terms():
    assert parse2("z1") == z1
    assert parse2("z1 + z2") == z1 + z2
    assert parse2("3") == Polynomial.constant(2, 3)
    assert parse2("0") == Polynomial.zero(2)


def test_parse_precedence():
    # ^ binds tighter than unary minus, which binds tighter than *
    assert parse2("-z1^2") == -(z1 ** 2)
    assert parse2("2*z1^3") == 2 * z1 ** 3
    assert parse2("z1 + z2*z1") == z1 + z2 * z1
    assert parse2("(z1 + z2)*z1") == (z1 + z2) * z1


def test_parse_power_chains():
    assert parse2("z1^2^3") == z1 ** 6 or parse2("z1^2^3") == (z1 ** 2) ** 3


def test_parse_rational_literals():
    assert parse2("1/2") == Polynomial.constant(2, Fraction(1, 2))
    assert parse2("3/4*z1") == Fraction(3, 4) * z1
    assert parse2("-1/2*z2^2") == Fraction(-1, 2) * z2 ** 2


def test_parse_subtraction_chain():
    assert parse2("z1 - z2 - 1") == z1 - z2 - 1
    assert parse2("z1 - -z2") == z1 + z2


def test_parse_whitespace_robust():
    assert parse2("  z1   +2 * z2 ") == z1 + 2 * z2


def test_parse_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable"):
        parse2("w + z1")


def test_parse_negative_exponent_rejected():
    with pytest.raises(ParseError, match="negative exponents are not allowed"):
        parse2("z1^-2")


def test_parse_slash_only_between_integers():
    with pytest.raises(ParseError):
        parse2("z1/z2")
    with pytest.raises(ParseError):
        parse2("z1/2")


def test_parse_zero_denominator():
    with pytest.raises(ParseError, match="zero denominator"):
        parse2("1/0")


def test_parse_error_carries_offset():
    try:
        parse2("z1 + $")
    except ParseError as error:
        assert error.offset == 5
        assert "offset 5" in str(error)
    else:
        pytest.fail("expected a parse error")


def test_parse_trailing_tokens_rejected():
    with pytest.raises(ParseError, match="trailing"):
        parse2("z1 z2")


def test_parse_unbalanced_parens():
    with pytest.raises(ParseError):
        parse2("(z1 + z2")


def test_empty_input_rejected():
    with pytest.raises(ParseError):
        parse2("")


def test_default_names():
    assert default_names(3) == ["z1", "z2", "z3"]


# ------------------------------------------------------------------ formatting


def test_format_poly_descending_order():
    f = z1 ** 2 + z2 ** 2 + z1 * z2 + 1
    assert format_poly(f) == "z1^2 + z1*z2 + z2^2 + 1"


def test_format_poly_signs_and_units():
    assert format_poly(-z1 + z2) == "-z1 + z2"
    assert format_poly(z1 - z2) == "z1 - z2"
    assert format_poly(Polynomial.zero(2)) == "0"
    assert format_poly(-1 * Polynomial.one(2)) == "-1"
    assert format_poly(Fraction(1, 2) * z1) == "1/2*z1"


def test_format_poly_custom_names():
    f = z1 + 2 * z2
    assert format_poly(f, ["u", "v"]) == "u + 2*v"


def test_format_ratfunc():
    assert format_ratfunc(z1 / z2) == "z1 / z2"
    assert format_ratfunc((z1 + 1) / z2) == "(z1 + 1) / z2"
    assert format_ratfunc((z1 * z2 + z2) / z2) == "z1 + 1"


def test_format_ore():
    ctx = q_scaling(2)
    e = ctx.poly([z1 + 1, Polynomial.zero(2), 2 * z1])
    assert format_ore(e) == "2*z1*x^2 + z1 + 1"
    assert format_ore(ctx.x()) == "x"
    assert format_ore(ctx.zero()) == "0"
    assert format_ore(ctx.poly([z2, z1 + z2])) == "(z1 + z2)*x + z2"


def test_format_ore_custom_generator():
    ctx = q_scaling(2)
    assert format_ore(ctx.x() * ctx.x(), generator="t") == "t^2"


# ------------------------------------------------------------------ round trips


def test_round_trip_seeded():
    rng = random.Random(71)
    for _ in range(200):
        f = random_poly(rng, 2, 4)
        assert parse2(format_poly(f)) == f


@given(st.integers(1, 3), st.data())
@settings(max_examples=60, deadline=None)
def test_round_trip_hypothesis(nvars, data):
    terms = data.draw(
        st.lists(
            st.tuples(
                st.lists(st.integers(0, 4), min_size=nvars, max_size=nvars),
                st.fractions(min_value=-5, max_value=5, max_denominator=6),
            ),
            max_size=5,
        )
    )
    f = Polynomial.zero(nvars)
    for exps, coeff in terms:
        f = f + Polynomial.monomial(nvars, tuple(exps), coeff)
    names = default_names(nvars)
    assert parse_poly(format_poly(f, names), names) == f
