from fractions import Fraction

import pytest

from axilab import catalog
from axilab.axes import analyze_idempotent
from axilab.errors import HypothesisFailure
from axilab.twogen import (
    CONTRADICTION,
    FAIL,
    NA,
    PASS,
    check_A00_closure,
    check_commuting_axes,
    full_report,
    verify_prop_C,
    verify_theorem_A,
    verify_theorem_B,
    verify_V_a_x,
)

half = Fraction(1, 2)
HALF_TYPES = ((half, half), (half, half))


def jordan_pair():
    J = catalog.get("jordan-sym2")
    m = catalog.landmarks("jordan-sym2", J)
    return J, m["e11"], m["u"]


def statuses(verdicts):
    return {v.claim: v.status for v in verdicts}


def test_jordan_pair_generates_dim_3():
    J, a, b = jordan_pair()
    rep = verify_theorem_A(J, a, b, HALF_TYPES)
    assert (rep.generated_dim, rep.span5_rank) == (3, 3)
    assert rep.ok and not rep.contradiction
    assert all(v.status in (PASS, NA) for v in rep.verdicts)
    assert rep.status_of("two-generated-span5") == PASS
    assert statuses(verify_theorem_B(J, a, b, HALF_TYPES))["dim3-jordan"] == PASS


def test_orthogonal_pair():
    D = catalog.get("diag-2")
    a, b = D.basis()
    rep = verify_theorem_A(D, a, b)
    assert rep.generated_dim == 2
    s = statuses(verify_prop_C(D, a, b))
    assert s["ab-zero-symmetric"] == PASS
    assert statuses(verify_theorem_B(D, a, b))["dim3-jordan"] == NA
    c = check_commuting_axes(D, a, b)
    assert [v.status for v in c] == [PASS, PASS] and "ab = 0" in c[0].detail


def test_equal_axes():
    J, a, _ = jordan_pair()
    rep = verify_theorem_A(J, a, a)
    assert (rep.generated_dim, rep.span5_rank) == (1, 1)
    s = statuses(verify_prop_C(J, a, a))
    assert s["ab-in-span-ab"] == PASS
    assert statuses(verify_theorem_B(J, a, a))["dim3-jordan"] == NA


def test_jordan_pair_outside_small_span():
    J, a, b = jordan_pair()
    s = statuses(verify_prop_C(J, a, b))
    assert s["ab-zero-symmetric"] == NA and s["ab-in-span-ab"] == NA
    c = check_commuting_axes(J, a, b)
    assert all(v.status == PASS and "lambda = delta" in v.detail for v in c)


def test_commuting_check_skipped_for_single_axis():
    A = catalog.get("ex-nonflex-3")
    a = A.e("a")
    assert [v.status for v in check_commuting_axes(A, a, a)] == [NA]


def test_hypothesis_failure_names_clause():
    B = catalog.get("ex-nonflex-5")
    m = catalog.landmarks("ex-nonflex-5", B)
    with pytest.raises(HypothesisFailure) as exc:
        verify_theorem_A(B, m["a"], m["b"])
    assert "b" in exc.value.clause


def test_span_of_a_and_x():
    J, a, b = jordan_pair()
    pa = analyze_idempotent(J, a)
    r = verify_V_a_x(J, pa, a)
    assert r.equal and r.lhs == J.span([a])
    A = catalog.get("ex-nonflex-3")
    a, x, y = A.basis()
    r = verify_V_a_x(A, analyze_idempotent(A, a), x)
    assert r.equal and r.lhs == A.span([a, x])
    B = catalog.get("ex-nonflex-5")
    a, c, x, y, z = B.basis()
    r = verify_V_a_x(B, analyze_idempotent(B, a), a + c + x + y + z)
    assert r.equal and r.lhs.dim == 5


def test_A00_closure_examples():
    B = catalog.get("ex-nonflex-5")
    a, c = B.e("a"), B.e("c")
    (row,) = check_A00_closure(B, [analyze_idempotent(B, a)])
    assert row.dim == 1 and row.closed and c * c == B.zero()
    D = catalog.get("diag-2")
    (row,) = check_A00_closure(D, [analyze_idempotent(D, D.e("e1"))])
    assert row.closed
    J = catalog.get("jordan-sym2")
    (row,) = check_A00_closure(J, [analyze_idempotent(J, J.e("e11"))])
    assert row.closed and row.dim == 1


def test_full_report_has_no_failures_on_catalog_pairs():
    for name in ("diag-2", "jordan-sym2", "mat-2"):
        A = catalog.get(name)
        marks = [x for x in catalog.landmarks(name, A).values() if analyze_idempotent(A, x).primitive_axis]
        for a in marks:
            for b in marks:
                rep = full_report(A, a, b)
                assert rep.ok, (name, a, b, [v for v in rep.verdicts if v.status == FAIL])
                assert CONTRADICTION not in str(rep.verdicts)
