import pytest

from axilab import catalog
from axilab.errors import BadParams
from axilab.fields import Field, Q
from axilab.io import parse_algebra, serialize_algebra
from axilab.search import enumerate_idempotents


def test_entries():
    assert catalog.names() == ["ex-nonflex-3", "ex-nonflex-5", "diag-2", "mat-2", "jordan-sym2"]
    for n in catalog.names():
        assert catalog.entry(n).provenance


def test_five_dim_b_square():
    B = catalog.get("ex-nonflex-5", {"l": "1/2", "d": "1/2"})
    a, c, x, y, z = B.basis()
    b = catalog.landmarks("ex-nonflex-5", B)["b"]
    # hand expansion of the table: the c-term does not cancel
    assert b * b - b == -c


def test_five_dim_param_guard():
    with pytest.raises(BadParams):
        catalog.get("ex-nonflex-5", {"l": "1/2", "d": "1/3"})
    with pytest.raises(BadParams):
        catalog.get("ex-nonflex-3", {"l": 1})
    with pytest.raises(BadParams):
        catalog.get("ex-nonflex-3", {"l": 0})
    with pytest.raises(BadParams):
        catalog.get("diag-2", {"l": 2})
    with pytest.raises(BadParams):
        catalog.get("nope")
    assert catalog.resolved_params("ex-nonflex-5", {"lambda": "1/3"}) == {"l": Q("1/3"), "d": Q("2/3")}


def test_default_examples():
    from axilab.axes import analyze_idempotent

    A = catalog.get("ex-nonflex-3", {"l": "1/2", "d": "1/3"})
    assert analyze_idempotent(A, A.e("a")).jordan_type is False
    assert len(enumerate_idempotents(catalog.get("diag-2", field=Field.gf(5)))) == 4


@pytest.mark.parametrize("field", [Q, Field.gf(5), Field.gf(7)])
@pytest.mark.parametrize("name", catalog.names())
def test_round_trip(name, field):
    A = catalog.get(name, field=field)
    text = serialize_algebra(A)
    B = parse_algebra(text)
    assert B == A and B.table == A.table and B.labels == A.labels
    assert serialize_algebra(B) == text
