"""Vector container: construction rules, arithmetic, text forms."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypervec.scalars import FieldTag, GaussianRational
from hypervec.vectors import (
    Vector,
    make_vector,
    parse_vector,
    unit_vector,
    vector_key,
    zero_vector,
)

F = Fraction
G = GaussianRational

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
vectors2 = st.builds(
    lambda a, b: make_vector(FieldTag.Q, [a, b]), rationals, rationals
)


def test_construction_and_accessors():
    v = make_vector(FieldTag.Q, [1, F(2, 3)])
    assert v.dim == 2
    assert v.coords == (F(1), F(2, 3))
    assert not v.is_zero
    assert zero_vector(FieldTag.Q, 3).is_zero
    assert unit_vector(FieldTag.Q, 2).coords == (F(1), F(0))
    assert unit_vector(FieldTag.Q, 2, axis=1).coords == (F(0), F(1))


def test_empty_rejected():
    with pytest.raises(ValueError):
        Vector(())


def test_field_mix_rejected():
    with pytest.raises(ValueError):
        make_vector(FieldTag.Q, [G(1, 1), 0])


def test_arithmetic_oracles():
    x = make_vector(FieldTag.Q, [1, 2])
    y = make_vector(FieldTag.Q, [3, -1])
    assert (x + y).coords == (F(4), F(1))
    assert (x - y).coords == (F(-2), F(3))
    assert (-x).coords == (F(-1), F(-2))
    assert x.scaled(F(3)).coords == (F(3), F(6))
    assert x.scaled(G(0, 1)).coords == (G(0, 1), G(0, 2))


def test_dimension_mismatch():
    x = make_vector(FieldTag.Q, [1, 2])
    z = make_vector(FieldTag.Q, [1, 2, 3])
    with pytest.raises(ValueError):
        x + z


def test_str_form():
    assert str(make_vector(FieldTag.Q, [3, 6])) == "(3, 6)"
    assert str(make_vector(FieldTag.QI, [G(1, 1), 0])) == "(1+i, 0)"


@pytest.mark.parametrize(
    "text,coords",
    [
        ("(1, 2)", (F(1), F(2))),
        ("(1,2)", (F(1), F(2))),
        ("( -1/2 , 3 )", (F(-1, 2), F(3))),
        ("(5)", (F(5),)),
    ],
)
def test_parse_vector(text, coords):
    assert parse_vector(text, FieldTag.Q).coords == coords


def test_parse_vector_gaussian():
    v = parse_vector("(1+i, -i)", FieldTag.QI)
    assert v.coords == (G(1, 1), G(0, -1))


@pytest.mark.parametrize("bad", ["", "1, 2", "(1, 2", "(1,, 2)", "()", "(0.5)"])
def test_parse_vector_rejects(bad):
    with pytest.raises(ValueError):
        parse_vector(bad, FieldTag.Q)


def test_round_trip_via_str():
    v = make_vector(FieldTag.QI, [G(F(1, 2), -1), G(0, F(2, 3))])
    assert parse_vector(str(v), FieldTag.QI) == v


def test_vector_key_orders_lexicographically():
    a = make_vector(FieldTag.Q, [1, 5])
    b = make_vector(FieldTag.Q, [2, 0])
    assert vector_key(a) < vector_key(b)


@given(vectors2, vectors2, vectors2)
def test_abelian_group_laws(x, y, z):
    zero = zero_vector(FieldTag.Q, 2)
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + zero == x
    assert x + (-x) == zero


@given(vectors2, rationals, rationals)
def test_scaling_laws(x, a, b):
    assert x.scaled(a).scaled(b) == x.scaled(a * b)
    assert x.scaled(a) + x.scaled(b) == x.scaled(a + b)
    assert x.scaled(F(1)) == x
