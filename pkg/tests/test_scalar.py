from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke2b.errors import DivisionByZero, DomainError
from hecke2b.scalar import I, ONE, ZERO, S, ScalarValue, int_power, parse_scalar

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
scalars = st.builds(S, fractions, fractions)
nonzero = scalars.filter(bool)


def test_rational_addition():
    assert S(Fraction(1, 2)) + S(Fraction(1, 3)) == S(Fraction(5, 6))


def test_i_squared():
    assert I * I == S(-1)


def test_inverse_of_two():
    assert S(2).inv() == S(Fraction(1, 2))


def test_lowest_terms():
    x = S(Fraction(4, 8), Fraction(-6, 4))
    assert (x.re, x.im) == (Fraction(1, 2), Fraction(-3, 2))
    assert x.re.denominator > 0


@pytest.mark.parametrize("a,n,expected", [(S(2), 3, S(8)), (I, 4, ONE), (S(3), -2, S(Fraction(1, 9)))])
def test_int_power_examples(a, n, expected):
    assert int_power(a, n) == expected


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ZERO.inv()
    with pytest.raises(DivisionByZero):
        int_power(ZERO, -1)
    with pytest.raises(DivisionByZero):
        ONE / ZERO


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)


@given(nonzero)
def test_multiplicative_inverse(a):
    assert a * a.inv() == ONE


@given(nonzero, st.integers(-6, 6), st.integers(-6, 6))
def test_int_power_additive(a, m, n):
    assert int_power(a, m + n) == int_power(a, m) * int_power(a, n)


@pytest.mark.parametrize(
    "text,value",
    [("3/2", S(Fraction(3, 2))), ("-i", S(0, -1)), ("1+2i", S(1, 2)), ("2,-1/3", S(2, Fraction(-1, 3))), ("i", I)],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        parse_scalar("two")


@given(scalars)
def test_str_and_json_round_trip(a):
    assert parse_scalar(str(a)) == a
    assert ScalarValue.from_json(a.to_json()) == a


def test_json_is_decimal_free():
    assert S(Fraction(1, 3), -2).to_json() == {"re": "1/3", "im": "-2"}


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.re = Fraction(2)
