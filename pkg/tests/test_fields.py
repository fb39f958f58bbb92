from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axilab.errors import FieldMismatch, ParseError
from axilab.fields import Field, Q, Residue, is_prime

PRIMES = [2, 3, 5, 7, 11, 13]


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@given(st.sampled_from(PRIMES), st.integers(-50, 50), st.integers(-50, 50))
def test_residue_ring_ops_match_integers(p, a, b):
    x, y = Residue(a, p), Residue(b, p)
    assert (x + y).v == (a + b) % p
    assert (x - y).v == (a - b) % p
    assert (x * y).v == (a * b) % p
    assert x == a % p


@given(st.sampled_from(PRIMES), st.integers(1, 200))
def test_residue_inverse(p, a):
    if a % p == 0:
        return
    x = Residue(a, p)
    assert x * x.inverse() == 1
    assert (Residue(1, p) / x) == x.inverse()


def test_mixed_moduli_refused():
    with pytest.raises(FieldMismatch):
        Residue(1, 5) + Residue(1, 7)


def test_field_coercion_and_parse():
    F5 = Field.gf(5)
    assert F5("1/2") == 3
    assert F5(Fraction(-1, 2)) == 2
    assert Q("3/6") == Fraction(1, 2)
    assert Q.parse(" -4 / 6 ") == Fraction(-2, 3)
    with pytest.raises(FieldMismatch):
        F5("1/5")
    with pytest.raises(ParseError):
        Q.parse("1/0")
    with pytest.raises(ParseError):
        Q.parse("x")
    with pytest.raises(FieldMismatch):
        Q(Residue(1, 5))


def test_field_descriptors():
    assert str(Q) == "Q" and Q.char == 0 and not Q.is_finite
    F7 = Field.gf(7)
    assert str(F7) == "GF 7" and F7.char == 7
    assert [int(x) for x in F7.elements()] == list(range(7))
    assert Q.to_json(Fraction(2)) == "2/1"
    assert F7.to_json(F7(-1)) == 6
    with pytest.raises(ValueError):
        Field.gf(6)
