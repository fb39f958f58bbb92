from fractions import Fraction

import pytest

from axilab import catalog
from axilab.errors import ParseError
from axilab.fields import Field, Q
from axilab.io import jsonable, parse_algebra, parse_element, serialize_algebra

NONFLEX3 = """\
# three-dim example, l = 1/2, d = 1/3
field Q
dim 3
basis a x y
prod a a = 1 a
prod a x = 1/2 x
prod x x = 1 a
prod y a = 1/3 y
prod y y = 1 a
"""


def test_parse_matches_catalog():
    assert parse_algebra(NONFLEX3) == catalog.get("ex-nonflex-3", {"l": "1/2", "d": "1/3"})


def test_no_products_gives_zero_algebra():
    A = parse_algebra("field GF 5\nbasis u v\n")
    assert all(u * v == A.zero() for u in A.basis() for v in A.basis())
    assert str(A.field) == "GF 5"


@pytest.mark.parametrize(
    "text,line,needle",
    [
        ("field Q\nbasis a\nprod a q = 1 a\n", 3, "unknown label 'q'"),
        ("field Q\nbasis a\nprod a a = 1 q\n", 3, "unknown label 'q'"),
        ("field Q\nbasis a\nprod a a = one a\n", 3, "bad scalar"),
        ("field Q\nbasis a\nprod a a = 1 a\n\nprod a a = 2 a\n", 5, "first at line 3"),
        ("field GF 5\nbasis a\nprod a a = 1/5 a\n", 3, "field mismatch"),
        ("field Q\ndim 2\nbasis a\n", 3, "dim 2"),
        ("field Q\nbasis a\nfoo a\n", 3, "unknown directive"),
        ("field GF 6\nbasis a\n", 1, "prime"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, needle):
    with pytest.raises(ParseError) as exc:
        parse_algebra(text)
    assert exc.value.line == line
    assert needle in str(exc.value)


def test_missing_header_lines():
    with pytest.raises(ParseError, match="field"):
        parse_algebra("basis a\n")
    with pytest.raises(ParseError, match="basis"):
        parse_algebra("field Q\n")


def test_serialize_is_canonical():
    A = parse_algebra(NONFLEX3)
    text = serialize_algebra(A)
    assert text.splitlines()[:3] == ["field Q", "dim 3", "basis a x y"]
    assert "prod a x = 1/2 x" in text
    assert serialize_algebra(parse_algebra(text)) == text


def test_element_examples():
    A = catalog.get("ex-nonflex-3")
    a, x, y = A.basis()
    assert parse_element("a", A) == a
    assert parse_element("3/2*x - y", A).coords == (0, Fraction(3, 2), -1)
    B = catalog.get("ex-nonflex-5")
    assert parse_element("a + c + x + y + z", B) == catalog.landmarks("ex-nonflex-5", B)["b"]
    assert parse_element("-a + 2 x", A) == -a + 2 * x
    J = catalog.get("jordan-sym2")
    assert parse_element("1/2 + 1/2*s12", J) == catalog.landmarks("jordan-sym2", J)["u"]


@pytest.mark.parametrize(
    "text,column",
    [("a + q", 5), ("a +", 4), ("a x", 3), ("2 * + x", 5), ("a ? x", 3), ("", 1)],
)
def test_element_errors_carry_columns(text, column):
    A = catalog.get("ex-nonflex-3")
    with pytest.raises(ParseError) as exc:
        parse_element(text, A)
    assert exc.value.column == column


def test_bare_scalar_needs_identity():
    A = catalog.get("ex-nonflex-3")
    with pytest.raises(ParseError, match="identity"):
        parse_element("2", A)
    M = catalog.get("mat-2")
    assert parse_element("2", M) == M.element([2, 0, 0, 2])


def test_element_scalars_in_finite_field():
    A = catalog.get("ex-nonflex-3", {"l": 2, "d": 3}, Field.gf(5))
    assert parse_element("1/2 x", A) == 3 * A.e("x")
    with pytest.raises(ParseError):
        parse_element("1/5 x", A)


def test_jsonable():
    F5 = Field.gf(5)
    A = catalog.get("diag-2", field=F5)
    assert jsonable({"x": A.e("e1"), "q": Q("2/4"), "r": F5(7), (Q(1), 2): [True, None]}) == {
        "x": [1, 0],
        "q": "1/2",
        "r": 2,
        "1,2": [True, None],
    }
