import itertools

import pytest

from axilab import catalog
from axilab.algebra import Algebra
from axilab.axes import analyze_idempotent
from axilab.errors import RationalsUnsupported, SearchSpaceTooLarge, UnsupportedCharacteristic
from axilab.fields import Field
from axilab.search import SearchConfig, enumerate_axes, enumerate_idempotents, pair_census

F5, F7 = Field.gf(5), Field.gf(7)


def zero_algebra(F):
    return Algebra(F, ["e"], [[[0]]])


def test_idempotents_of_three_dim_example():
    A = catalog.get("ex-nonflex-3", {"l": 2, "d": 3}, F5)
    a, x, y = A.basis()
    assert enumerate_idempotents(A) == [A.zero(), a, 3 * a + 2 * x, 3 * a + 3 * x]


def test_idempotents_trivial_cases():
    assert enumerate_idempotents(zero_algebra(F5)) == [zero_algebra(F5).zero()]
    D = catalog.get("diag-2", field=F5)
    e1, e2 = D.basis()
    assert set(enumerate_idempotents(D)) == {D.zero(), e1, e2, e1 + e2}


def test_scan_matches_direct_loop():
    J = catalog.get("jordan-sym2", field=F7)
    direct = [J.element(c) for c in itertools.product(range(7), repeat=3) if J.element(c) * J.element(c) == J.element(c)]
    assert enumerate_idempotents(J) == direct
    assert enumerate_idempotents(J, SearchConfig(workers=2)) == direct


def test_axes_examples():
    A = catalog.get("ex-nonflex-3", {"l": 2, "d": 3}, F5)
    axes = enumerate_axes(A, SearchConfig(require_primitive=False))
    assert [p.element for p in axes] == [A.e("a")]
    assert axes[0].primitive
    assert enumerate_axes(zero_algebra(F5)) == []
    D = catalog.get("diag-2", field=F5)
    axes = enumerate_axes(D)
    assert set(p.element for p in axes) == set(D.basis())
    assert all(p.primitive and p.left_type == () for p in axes)


def test_axes_agree_with_profile():
    for name in catalog.names():
        A = catalog.get(name, field=F5)
        for p in enumerate_axes(A, SearchConfig(require_primitive=False)):
            q = analyze_idempotent(A, p.element)
            assert (q.axis, q.primitive, q.left_type, q.right_type) == (p.axis, p.primitive, p.left_type, p.right_type)


def test_type_filter():
    J = catalog.get("jordan-sym2", field=F7)
    all_axes = enumerate_axes(J)
    assert len(enumerate_axes(J, SearchConfig(type_filter=((4, 4),)))) == len(all_axes)
    assert enumerate_axes(J, SearchConfig(type_filter=((2, 3),))) == []


def test_census_examples():
    D = catalog.get("diag-2", field=F5)
    rows = pair_census(D)
    assert len(rows) == 1 and rows[0].generated_dim == 2
    assert pair_census(catalog.get("ex-nonflex-3", {"l": 2, "d": 3}, F5)) == []
    rows = pair_census(catalog.get("jordan-sym2", field=F7))
    assert rows and {r.generated_dim for r in rows} <= {2, 3}
    assert all(all(r.jordan_flags) for r in rows if r.generated_dim == 3)
    assert not any(r.contradiction for r in rows)


def test_search_refusals():
    with pytest.raises(RationalsUnsupported):
        enumerate_idempotents(catalog.get("diag-2"))
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_idempotents(catalog.get("mat-2", field=F7), SearchConfig(max_elements=100))
    with pytest.raises(UnsupportedCharacteristic):
        enumerate_axes(catalog.get("diag-2", field=Field.gf(3)))
