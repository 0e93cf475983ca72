from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from curveloops.errors import ParseError
from curveloops.parser import (
    format_normal_form,
    format_series,
    infer_ring,
    parse_curve_spec,
    parse_fraction_list,
    parse_place,
    parse_series,
    parse_x_polynomial,
    parse_xy_rational,
)
from curveloops.normal_form import factor
from curveloops.ring import POLY, RATIONAL, Coeff, nilpotent_ring
from curveloops.series import LaurentSeries

NIL3 = nilpotent_ring(3)


def S(terms, prec=None, ring=RATIONAL):
    return LaurentSeries.build(ring, terms, prec)


# -- parsing ---------------------------------------------------------------------


def test_parse_plain_series():
    assert parse_series("z^-2 + 3 + z^5") == S({-2: 1, 0: 3, 5: 1})
    assert parse_series("2*z^2 - 6*z^3") == S({2: 2, 3: -6})
    assert parse_series("-z") == S({1: -1})
    assert parse_series("0") == S({})


def test_parse_fraction_coefficients():
    assert parse_series("1/2*z^-1 + 3/4") == S({-1: Fraction(1, 2), 0: Fraction(3, 4)})


def test_parse_big_o():
    s = parse_series("z + z^2 + O(z^6)")
    assert s == S({1: 1, 2: 1}, prec=6)
    assert parse_series("O(z^3)") == S({}, prec=3)


def test_parse_eps_and_t():
    s = parse_series("(1 + eps)*z^-1 + 2")
    assert s.ring == NIL3
    assert s.coeff(-1) == Coeff.nil(NIL3, [1, 1])
    u = parse_series("t*z + z^2")
    assert u.ring == POLY
    assert u.coeff(1) == Coeff.t()
    with pytest.raises(ParseError):
        parse_series("eps + t")


def test_infer_ring():
    assert infer_ring("z + 1") == RATIONAL
    assert infer_ring("eps^2*z") == nilpotent_ring(3)
    assert infer_ring("t^2 - z") == POLY


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse_series("z +")
    with pytest.raises(ParseError):
        parse_series("z ^ q")
    with pytest.raises(ParseError):
        parse_series("w + 1")
    with pytest.raises(ParseError):
        parse_series("(z + 1")


def test_parse_xy_rational():
    num, den = parse_xy_rational("(y + 1)/(2*y*(x - 2)) dx")
    assert str(num) == "1 + y"
    assert str(den) == "-4*y + 2*x*y"
    num, den = parse_xy_rational("x^2 - 1")
    assert str(den) == "1"


def test_parse_x_polynomial():
    assert parse_x_polynomial("x^3 + 1") == (1, 0, 0, 1)
    assert parse_x_polynomial("x^4 - 1") == (-1, 0, 0, 0, 1)
    with pytest.raises(ParseError):
        parse_x_polynomial("y + x")
    with pytest.raises(ParseError):
        parse_x_polynomial("1/x")


def test_parse_curve_spec():
    assert parse_curve_spec("a1").kind == "a1"
    assert parse_curve_spec("gm").kind == "gm"
    curve = parse_curve_spec("hyp:h=x^3+1")
    assert curve.h == (1, 0, 0, 1)
    with pytest.raises(ParseError):
        parse_curve_spec("elliptic")


def test_parse_place():
    assert parse_place("infinity+") == "infinity+"
    assert parse_place("0") == "0"
    assert parse_place("3/2") == (Fraction(3, 2),)
    assert parse_place("(2, -3)") == (Fraction(2), Fraction(-3))
    with pytest.raises(ParseError):
        parse_place("(1, 2")


def test_parse_fraction_list():
    assert parse_fraction_list("0, 1, -3/2") == (Fraction(0), Fraction(1), Fraction(-3, 2))


# -- formatting -------------------------------------------------------------------


def test_format_series():
    assert format_series(S({-2: 1, 0: 3, 5: 1})) == "z^-2 + 3 + z^5"
    assert format_series(S({1: Fraction(-1, 2)}, prec=4)) == "-1/2*z + O(z^4)"
    assert format_series(S({})) == "0"
    assert format_series(S({}, prec=1)) == "O(z)"


def test_format_normal_form():
    nf = factor(S({2: 2, 3: -6}))
    assert format_normal_form(nf) == "unit=2 order=2 neg={} pos={1: 3}"
    nf = factor(S({1: 1, 2: 1}, prec=6))
    assert format_normal_form(nf).endswith("(mod O(z^6))")


@st.composite
def arbitrary_series(draw):
    ring = draw(st.sampled_from([RATIONAL, NIL3, POLY]))
    n = draw(st.integers(0, 4))
    exps = draw(st.lists(st.integers(-5, 8), min_size=n, max_size=n, unique=True))
    q = st.fractions(min_value=-9, max_value=9, max_denominator=7)
    terms = {}
    for e in exps:
        if ring == RATIONAL:
            terms[e] = Coeff.const(ring, draw(q))
        elif ring == POLY:
            terms[e] = Coeff.poly([draw(q), draw(q)])
        else:
            terms[e] = Coeff.nil(ring, [draw(q), draw(q), draw(q)])
    prec = draw(st.one_of(st.none(), st.integers(9, 12)))
    return LaurentSeries.build(ring, terms, prec)


@given(arbitrary_series())
@settings(max_examples=80)
def test_format_parse_roundtrip(s):
    assert parse_series(format_series(s), s.ring) == s
