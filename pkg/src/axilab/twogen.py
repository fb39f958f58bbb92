"""Verdicts for subalgebras generated by two primitive axes.

Everything runs inside S = closure({a, b}), restricted to its own structure
constants, so a pair may sit inside a larger algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, Element, subalgebra_closure
from .axes import (
    AxisProfile,
    analyze_idempotent,
    compute_sigma,
    decompose,
    infer_types,
    validate_types,
)
from .errors import HypothesisFailure, NotAnAxis, TypeShapeError

PASS, FAIL, NA = "PASS", "FAIL", "N-A"
CONTRADICTION = "PAPER-CONTRADICTION"


@dataclass(frozen=True)
class Verdict:
    claim: str
    status: str
    detail: str = ""


@dataclass
class TwoGenReport:
    generated_dim: int
    span5_rank: int
    generates_all: bool
    verdicts: list = dc_field(default_factory=list)
    contradiction: bool = False

    @property
    def ok(self) -> bool:
        return not self.contradiction and all(v.status != FAIL for v in self.verdicts)

    def status_of(self, claim: str) -> str:
        for v in self.verdicts:
            if v.claim == claim:
                return v.status
        raise KeyError(claim)


def _verdict(claim, ok, detail="") -> Verdict:
    return Verdict(claim, PASS if ok else FAIL, detail)


def _split_types(types):
    if types is None:
        return None, None
    types = tuple(types)
    if len(types) == 4:
        return types[:2], types[2:]
    if len(types) == 2 and all(isinstance(t, (tuple, list)) for t in types):
        return tuple(types[0]), tuple(types[1])
    raise TypeShapeError(f"types must be (l, d, l', d') or ((l, d), (l', d')), got {types!r}")


@dataclass
class PairContext:
    """The pair (a, b) transported into the subalgebra it generates."""

    parent: Algebra
    B: Algebra
    a: Element
    b: Element
    pa: AxisProfile
    pb: AxisProfile
    types_a: tuple
    types_b: tuple

    @property
    def dim(self) -> int:
        return self.B.dim


def _axis_types(A, x, name, declared):
    prof = analyze_idempotent(A, x)
    if not prof.idempotent:
        raise HypothesisFailure(f"{name} is idempotent", f"{name} = {x} is not idempotent")
    if not (prof.axis and prof.primitive):
        raise HypothesisFailure(f"{name} is a primitive axis", f"{name} = {x}: {prof.summary()}")
    if not prof.primitive_axis:
        raise HypothesisFailure(f"{name} satisfies the involutory fusion rules", f"{name} = {x}: {prof.summary()}")
    if declared is None:
        if not prof.two_eigenvalue:
            raise HypothesisFailure(f"{name} has one eigenvalue besides 0, 1 per side")
        declared = infer_types(prof)
    f = A.field
    declared = (f(declared[0]), f(declared[1]))
    if not validate_types(A, x, *declared):
        raise HypothesisFailure(f"{name} has type ({declared[0]}, {declared[1]})")
    return declared


def pair_context(A: Algebra, a: Element, b: Element, types=None) -> PairContext:
    """Verify the axis hypotheses and restrict to the subalgebra generated by a and b."""
    ta, tb = _split_types(types)
    ta = _axis_types(A, a, "a", ta)
    tb = _axis_types(A, b, "b", tb)
    sub = A.restrict(subalgebra_closure(A, [a, b]))
    B = sub.algebra
    aS, bS = sub.project(a), sub.project(b)
    pa, pb = analyze_idempotent(B, aS), analyze_idempotent(B, bS)
    for p, name in ((pa, "a"), (pb, "b")):
        if not p.primitive_axis:
            raise HypothesisFailure(f"{name} is a primitive axis of the generated subalgebra", p.summary())
    return PairContext(A, B, aS, bS, pa, pb, ta, tb)


def _contains(B: Algebra, elems, x: Element) -> bool:
    return B.span(elems).contains(x.coords)


def verify_theorem_A(A: Algebra, a: Element, b: Element, types=None, ctx: PairContext | None = None) -> TwoGenReport:
    ctx = ctx or pair_context(A, a, b, types)
    B, a, b = ctx.B, ctx.a, ctx.b
    ab, ba = a * b, b * a
    aba = ab * a
    bab = (b * a) * b
    V = [a, b, ab, ba]
    V5 = V + [aba]
    rank5 = B.span(V5).dim
    n = B.dim
    report = TwoGenReport(n, rank5, n == ctx.parent.dim)
    out = report.verdicts
    out.append(_verdict("two-generated-span5", rank5 == n and n <= 5, f"dim {n}, rank of a, b, ab, ba, aba = {rank5}"))
    if n == 4 or n > 5:
        report.contradiction = True
        out.append(Verdict("no-dim-4", FAIL, f"{CONTRADICTION}: generated subalgebra has dimension {n}"))
    else:
        out.append(Verdict("no-dim-4", PASS, f"dim {n}"))
    out.append(_verdict("bab-in-span5", _contains(B, V5, bab)))
    out.append(_verdict("ab-squared-minus-abab", _contains(B, V, ab * ab - a * bab)))
    abab = a * bab
    out.append(
        _verdict(
            "span5-products",
            all(_contains(B, V5, t) for t in (abab, bab * a, abab * a)),
            "a(bab), (bab)a, a(bab)a",
        )
    )
    Vp = B.span(V5)
    stable = all(_contains(B, V5, a * Element(B, v)) and _contains(B, V5, Element(B, v) * a) for v in Vp.basis)
    out.append(_verdict("span5-stable-under-a", stable))
    left = all(_contains(B, [a, a * x], a * (a * x)) for x in B.basis())
    right = all(_contains(B, [b, x * b], (x * b) * b) for x in B.basis())
    out.append(_verdict("left-square-in-span", left and right, "a(ax) in Fa + F ax and (xb)b in Fb + F xb"))
    d = decompose(B, ctx.pa, b, ctx.types_a)
    lam, delta = ctx.types_a
    comps = [a] + [d.part(mu, nu) for mu, nu in ((0, 0), (lam, 0), (0, delta), (lam, delta))]
    out.append(_verdict("generated-by-components", B.span(comps).dim == n, "a, b_00, b_l0, b_0d, b_ld"))
    sig = compute_sigma(B, a, b, ctx.types_a, ctx.types_b, ctx.pa, ctx.pb)
    bad = [k for k, ok in sig.checks.items() if not ok]
    out.append(_verdict("sigma-identities", not bad, "; ".join(bad)))
    return report


@dataclass
class SpanReport:
    lhs: object
    rhs: object
    equal: bool
    component_dims: dict


def verify_V_a_x(A: Algebra, profile: AxisProfile, x: Element, types=None) -> SpanReport:
    """span{a, x, ax, xa, axa} against the span of a and the four components of x."""
    if not (profile.axis and profile.primitive):
        raise NotAnAxis(f"{profile.element} is not a primitive axis")
    a = profile.element
    lam, delta = types if types is not None else infer_types(profile)
    d = decompose(A, profile, x, (lam, delta))
    keys = ((0, 0), (lam, 0), (0, delta), (lam, delta))
    comps = {k: d.part(*k) for k in keys}
    lhs = A.span([a, x, a * x, x * a, (a * x) * a])
    rhs = A.span([a] + list(comps.values()))
    dims = {f"x_{mu},{nu}": int(bool(v)) for (mu, nu), v in comps.items()}
    return SpanReport(lhs, rhs, lhs == rhs, dims)


def verify_prop_C(A: Algebra, a: Element, b: Element, types=None, ctx: PairContext | None = None) -> list:
    ctx = ctx or pair_context(A, a, b, types)
    B, a, b = ctx.B, ctx.a, ctx.b
    ab, ba = a * b, b * a
    out = []
    if not ab:
        out.append(_verdict("ab-zero-symmetric", not ba and B.dim <= 2, f"ba = {ba}, dim {B.dim}"))
    else:
        out.append(Verdict("ab-zero-symmetric", NA, "hypothesis ab = 0 not met"))
    if _contains(B, [a, b], ab):
        out.append(_verdict("ab-in-span-ab", B.span([a, b]).dim == B.dim, f"dim {B.dim}"))
    else:
        out.append(Verdict("ab-in-span-ab", NA, "hypothesis ab in Fa + Fb not met"))
    V = B.span([a, b, ab])
    if V.contains(ba.coords):
        out.append(_verdict("ba-in-V", V.dim == B.dim, f"dim V = {V.dim}, dim = {B.dim}"))
    else:
        out.append(Verdict("ba-in-V", NA, "hypothesis ba in Fa + Fb + Fab not met"))
    out.append(ab_in_line_vanishes(B, a, b))
    return out


def ab_in_line_vanishes(B: Algebra, a: Element, b: Element) -> Verdict:
    """ab in Fa forces ab = 0, for an idempotent a and a primitive right axis b.

    The argument needs a outside Fb; for a in Fb the product is a itself.
    """
    claim = "ab-in-line-vanishes"
    if B.span([b]).contains(a.coords):
        return Verdict(claim, NA, "hypothesis a not in Fb not met")
    ab = a * b
    if not B.span([a]).contains(ab.coords):
        return Verdict(claim, NA, "hypothesis ab in Fa not met")
    return _verdict(claim, not ab, f"ab = {ab}")


def verify_theorem_B(A: Algebra, a: Element, b: Element, types=None, ctx: PairContext | None = None) -> list:
    ctx = ctx or pair_context(A, a, b, types)
    B = ctx.B
    out = []
    if B.dim == 3:
        ok = ctx.pa.jordan_type and ctx.pb.jordan_type
        out.append(_verdict("dim3-jordan", ok, f"a Jordan type {ctx.pa.jordan_type}, b Jordan type {ctx.pb.jordan_type}"))
    else:
        out.append(Verdict("dim3-jordan", NA, f"hypothesis dim 3 not met (dim {B.dim})"))
    lam, delta = ctx.types_a
    if ctx.pa.jordan_type and lam != delta:
        d = decompose(B, ctx.pa, ctx.b, ctx.types_a)
        bld = d.part(lam, delta)
        out.append(_verdict("jordan-square-vanishes", not (bld * bld), f"b_ld^2 = {bld * bld}"))
    else:
        out.append(Verdict("jordan-square-vanishes", NA, "hypothesis a of Jordan type with lambda != delta not met"))
    return out


def check_commuting_axes(A: Algebra, a: Element, b: Element, types=None) -> list:
    """If ab = ba then ab = 0 or lambda = delta, for each of a, b in turn."""
    ta, tb = _split_types(types)
    ta = _axis_types(A, a, "a", ta)
    tb = _axis_types(A, b, "b", tb)
    claim = "commuting-axes"
    if a == b:
        return [Verdict(claim, NA, "hypothesis a != b not met")]
    ab, ba = a * b, b * a
    if ab != ba:
        return [Verdict(claim, NA, "hypothesis ab = ba not met")]
    out = []
    for name, (lam, delta) in (("a", ta), ("b", tb)):
        if not ab:
            out.append(Verdict(claim, PASS, f"{name}: ab = 0"))
        elif lam == delta:
            out.append(Verdict(claim, PASS, f"{name}: lambda = delta = {lam}"))
        else:
            out.append(Verdict(claim, FAIL, f"{name}: ab = {ab} != 0 and lambda {lam} != delta {delta}"))
    return out


@dataclass(frozen=True)
class A00Row:
    axis: Element
    dim: int
    closed: bool
    witness: tuple = ()


def check_A00_closure(A: Algebra, profiles) -> list:
    """Whether A_{0,0}(a) is closed under the product, per axis (informational)."""
    rows = []
    for p in profiles:
        if not (p.axis and p.primitive):
            raise NotAnAxis(f"{p.element} is not a primitive axis")
        U = p.component(0, 0)
        basis = [Element(A, v) for v in U.basis]
        witness = ()
        for u in basis:
            for v in basis:
                if not U.contains((u * v).coords):
                    witness = (u, v)
                    break
            if witness:
                break
        rows.append(A00Row(p.element, U.dim, not witness, witness))
    return rows


def full_report(A: Algebra, a: Element, b: Element, types=None) -> TwoGenReport:
    """Span-five report extended with the remaining pair verdicts."""
    ctx = pair_context(A, a, b, types)
    rep = verify_theorem_A(A, a, b, ctx=ctx)
    rep.verdicts += verify_prop_C(A, a, b, ctx=ctx)
    rep.verdicts += verify_theorem_B(A, a, b, ctx=ctx)
    rep.verdicts += check_commuting_axes(A, a, b, (ctx.types_a, ctx.types_b))
    return rep
