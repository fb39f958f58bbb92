import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from axilab import catalog
from axilab.algebra import (
    Algebra,
    check_commutative,
    check_flexible,
    check_flexible_idempotent,
    check_pa_degree4,
    default_seed,
    subalgebra_closure,
)
from axilab.errors import DimensionError, FieldMismatch, UnsupportedCharacteristic
from axilab.fields import Field, Q
from axilab.linalg import Matrix

half, third = Fraction(1, 2), Fraction(1, 3)


def nonflex3():
    return catalog.get("ex-nonflex-3", {"l": "1/2", "d": "1/3"})


def nonflex5():
    return catalog.get("ex-nonflex-5", {"l": "1/2"})


def test_products_in_three_dim_example():
    A = nonflex3()
    a, x, y = A.basis()
    assert a * x == half * x
    assert x * a == A.zero()
    assert A.zero() * y == A.zero()
    assert x * x == a and y * a == third * y


def test_left_and_right_operators():
    A = nonflex3()
    a = A.e("a")
    assert A.left_operator(a) == Matrix.diag(Q, [1, half, 0])
    assert A.right_operator(a) == Matrix.diag(Q, [1, 0, third])
    assert A.left_operator(A.zero()).is_zero()


@pytest.mark.parametrize("name", catalog.names())
def test_operators_match_products(name):
    A = catalog.get(name)
    for u, v in itertools.product(A.basis(), A.basis()):
        assert A.element(A.left_operator(u) @ v.coords) == u * v
        assert A.element(A.right_operator(u) @ v.coords) == v * u


def test_closure_small_cases():
    A = nonflex3()
    a, x, y = A.basis()
    assert subalgebra_closure(A, [a]) == A.span([a])
    assert subalgebra_closure(A, [a, x]) == A.span([a, x])
    B = nonflex5()
    a, c, x, y, z = B.basis()
    assert subalgebra_closure(B, [a, a + c + x + y + z]).dim == 5


def test_flexibility_checks():
    assert check_flexible(catalog.get("jordan-sym2")).holds
    assert check_flexible(catalog.get("mat-2")).holds
    B = nonflex5()
    w = check_flexible(B)
    assert not w.holds and w.witness
    a, c, x, y, z = B.basis()
    assert (x * a) * x == B.zero() and x * (a * x) == -half * c


def test_commutativity_checks():
    assert check_commutative(catalog.get("jordan-sym2")).holds
    w = check_commutative(nonflex3())
    A = nonflex3()
    assert not w.holds and set(w.witness) == {A.e("a"), A.e("x")}
    one = Algebra(Q, ["e"], [[[1]]])
    assert check_commutative(one).holds


def test_flexible_idempotent_identities():
    A = nonflex3()
    a, x, y = A.basis()
    assert all((a * (v * a)) == ((a * v) * a) for v in A.basis())
    w = check_flexible_idempotent(A, a)
    assert not w.holds
    assert check_flexible_idempotent(catalog.get("diag-2"), catalog.get("diag-2").e("e1")).holds
    M = catalog.get("mat-2")
    assert check_flexible_idempotent(M, M.e("e11")).holds


def test_power_associativity_probe():
    assert check_pa_degree4(catalog.get("mat-2")).holds
    assert check_pa_degree4(catalog.get("diag-2")).holds
    assert check_pa_degree4(catalog.get("jordan-sym2")).holds
    # x^2 x^2 = a but (x x^2) x = (xa)x = 0
    A = nonflex3()
    x = A.e("x")
    assert (x * x) * (x * x) != (x * (x * x)) * x
    assert not check_pa_degree4(A).holds
    assert not check_pa_degree4(nonflex5()).holds
    with pytest.raises(UnsupportedCharacteristic):
        check_pa_degree4(catalog.get("diag-2", field=Field.gf(3)))


def test_malformed_tables_rejected():
    with pytest.raises(DimensionError):
        Algebra(Q, ["a", "b"], [[[1, 0]]])
    with pytest.raises(FieldMismatch):
        nonflex3().e("a") + catalog.get("diag-2", field=Field.gf(5)).e("e1")


def test_unit_detection():
    assert catalog.get("mat-2").unit() == catalog.get("mat-2").element([1, 0, 0, 1])
    assert nonflex3().unit() is None


def test_default_seed(monkeypatch):
    monkeypatch.delenv("AXILAB_SEED", raising=False)
    s = default_seed()
    monkeypatch.setenv("AXILAB_SEED", "17")
    assert default_seed() == 17 and s != 17


@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_product_is_bilinear(u, v):
    B = nonflex5()
    x, y = B.element(u), B.element(v)
    z = B.e("z")
    assert (x + y) * z == x * z + y * z
    assert z * (2 * x) == 2 * (z * x)
