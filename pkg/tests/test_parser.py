import pytest
from hypothesis import given
from hypothesis import strategies as st

from germcalc.parser import (
    NonAffineSubscript,
    ParseError,
    SubscriptOutOfRange,
    UnboundParameter,
    instantiate,
    parse_poly,
    parse_template,
    print_canonical,
    print_template,
)
from germcalc.poly import Polynomial
from germcalc.scalars import Field
from strategies import polys

R, C = Field.REAL, Field.COMPLEX
FAMILY = "x_{2k+1}^2 + (x_{2k+2} - x_{2k+3})^2"


def test_family_generator():
    p = parse_poly("x_1^2 + (x_2 - x_3)^2")
    assert p.support() == {1, 2, 3}
    assert p.degree() == 2


def test_zero():
    assert parse_poly("0").is_zero()
    assert print_canonical(Polynomial.zero()) == "0"


def test_gaussian_expansion():
    assert parse_poly("(x_1+i*x_2)*(x_1-i*x_2)", C) == parse_poly("x_1^2 + x_2^2", C)


def test_imaginary_unit_needs_complex_field():
    with pytest.raises(ParseError):
        parse_poly("i*x_1", R)


def test_canonical_order_and_exponents():
    a = Polynomial.var(2) + Polynomial.var(1)
    b = Polynomial.var(1) + Polynomial.var(2)
    assert print_canonical(a) == print_canonical(b) == "x_1 + x_2"
    assert print_canonical(parse_poly("x_1*x_1")) == "x_1^2"


def test_rational_coefficients_print_and_parse():
    p = parse_poly("-3/2*x_1*x_2^2 + 1/3")
    assert parse_poly(print_canonical(p)) == p


@pytest.mark.parametrize("bad", ["x_0", "x_", "x_1 +", "(x_1", "y", "x_{k+1}", "2 ** 3"])
def test_malformed_expressions(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_unbound_parameter_reported():
    with pytest.raises(UnboundParameter):
        parse_poly("x_{k+1}")


def test_error_position():
    with pytest.raises(ParseError) as exc:
        parse_poly("x_1 + $")
    assert exc.value.column == 7


# -- templates


def test_templates_are_valid():
    parse_template(FAMILY)
    parse_template("x_{k+1} - x_{k+2}")


def test_nonaffine_subscript():
    with pytest.raises(NonAffineSubscript):
        parse_template("x_{k*k}")


def test_decreasing_or_small_subscripts():
    with pytest.raises(SubscriptOutOfRange):
        parse_template("x_{k}")
    with pytest.raises(SubscriptOutOfRange):
        parse_template("x_{5-k}")


def test_template_needs_parameter():
    with pytest.raises(ParseError):
        parse_template("x_1 + x_2")


def test_family_instances():
    t = parse_template(FAMILY)
    assert instantiate(t, 0) == parse_poly("x_1^2 + (x_2 - x_3)^2")
    assert instantiate(t, 1) == parse_poly("x_3^2 + (x_4 - x_5)^2")
    assert print_canonical(instantiate(t, 1)) == "x_3^2 + x_4^2 - 2*x_4*x_5 + x_5^2"


def test_shift_template():
    assert instantiate(parse_template("x_{k+1}"), 41) == Polynomial.var(42)


def test_juxtaposed_slope():
    assert instantiate(parse_template("x_{2k+1}"), 3) == Polynomial.var(7)


@given(polys(nvars=6, max_exp=4, max_terms=6))
def test_round_trip_real(p):
    s = print_canonical(p)
    q = parse_poly(s)
    assert q == p
    assert print_canonical(q) == s


@given(polys(nvars=4, max_terms=4, field=C))
def test_round_trip_complex(p):
    assert parse_poly(print_canonical(p), C) == p


@pytest.mark.parametrize("text", [FAMILY, "x_{k+1} - x_{k+2}", "-(x_{k+1} - 3/2)*x_2^3", "(1/2)^2*x_{3k+4} + -x_1"])
def test_template_print_round_trip(text):
    t = parse_template(text)
    again = parse_template(print_template(t))
    assert again.body == t.body
    assert print_template(again) == print_template(t)


@given(st.integers(0, 30))
def test_template_print_preserves_instances(k):
    t = parse_template(FAMILY)
    assert instantiate(parse_template(print_template(t)), k) == instantiate(t, k)
