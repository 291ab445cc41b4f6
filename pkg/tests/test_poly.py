from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linkinv.poly import DELTA, ONE, ZERO, LaurentPoly, parse_t

polys = st.dictionaries(st.integers(-12, 12), st.integers(-9, 9), max_size=6).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).divide_exact(b) == a


def test_inexact_division_raises():
    with pytest.raises(ValueError):
        LaurentPoly({0: 1, 2: 1}).divide_exact(LaurentPoly({0: 1, 1: 1}))


@given(polys)
def test_render_parse_roundtrip(p):
    assert parse_t(p.render_t()) == p
    assert parse_t(p.render_z(), var="z") == p


@given(polys)
def test_json_roundtrip(p):
    assert LaurentPoly.from_json(p.to_json()) == p


@given(polys)
def test_invert_variable_is_involution(p):
    assert p.invert_variable().invert_variable() == p


def test_half_integer_degrees():
    p = parse_t("t^{9/2} - 2t^{7/2} + t^{-9/2}")
    assert p.deg_hi() == 9
    assert p.deg_hi_t() == Fraction(9, 2)
    assert p.deg_lo_t() == Fraction(-9, 2)


def test_delta_is_unknot_factor():
    assert DELTA == parse_t("-t^{-1/2} - t^{1/2}")
    assert DELTA**2 == parse_t("t + 2 + t^{-1}")


def test_latex_fractions():
    s = parse_t("t^{9/2} - t^{-7/2}").render_latex()
    assert "\\frac{9}{2}" in s and "-\\frac{7}{2}" in s


@pytest.mark.parametrize("bad", ["t^", "x^2", "2t^{1/3}", "+"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_t(bad)
