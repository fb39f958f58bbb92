"""Miyamoto involutions of primitive two-eigenvalue axes and the group they generate."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, Element, IdentityWitness, subalgebra_closure
from .axes import AxisProfile, analyze_idempotent, decompose, infer_types
from .errors import HypothesisFailure, NotAnAxis, SingularMatrix, UnsupportedCharacteristic
from .linalg import Matrix, Subspace, rank

TAU_LAMBDA = "TauLambda"
TAU_DELTA = "TauDelta"
TAU_DIAG = "TauDiag"

DEFAULT_MAX_GROUP = 10000
DEFAULT_MAX_WORDS = 20


@dataclass(frozen=True)
class Involution:
    kind: str
    matrix: Matrix
    axis: Element

    def __call__(self, y: Element) -> Element:
        return Element(y.algebra, self.matrix @ y.coords)


def _require_axis(profile: AxisProfile):
    if profile.algebra.field.char == 2:
        raise UnsupportedCharacteristic("Miyamoto involutions need characteristic != 2")
    if not (profile.axis and profile.primitive):
        raise NotAnAxis(f"{profile.element} is not a primitive axis")
    if not profile.two_eigenvalue:
        raise NotAnAxis(f"{profile.element} has more than one eigenvalue besides 0, 1 on a side")


def miyamoto_involutions(A: Algebra, profile: AxisProfile, types=None):
    """(tau_lambda, tau_delta, tau_diag) built from the component projectors."""
    _require_axis(profile)
    lam, delta = types if types is not None else infer_types(profile)
    I = Matrix.identity(A.field, A.dim)
    P = profile.component_projector
    p_l0, p_0d, p_ld = P(lam, 0), P(0, delta), P(lam, delta)
    a = profile.element
    return (
        Involution(TAU_LAMBDA, I - 2 * (p_l0 + p_ld), a),
        Involution(TAU_DELTA, I - 2 * (p_0d + p_ld), a),
        Involution(TAU_DIAG, I - 2 * (p_l0 + p_0d), a),
    )


def jordan_collapse(A: Algebra, profile: AxisProfile, involutions=None) -> bool:
    """For a Jordan-type axis, tau_lambda == tau_delta and tau_diag is the identity."""
    tl, td, tg = involutions or miyamoto_involutions(A, profile)
    return tl.matrix == td.matrix and tg.matrix == Matrix.identity(A.field, A.dim)


def check_automorphism(A: Algebra, t: Matrix) -> IdentityWitness:
    if t.shape != (A.dim, A.dim) or rank(t) < A.dim:
        raise SingularMatrix("automorphism candidate is not invertible")
    images = [Element(A, t @ e.coords) for e in A.basis()]
    for i, x in enumerate(A.basis()):
        for j, y in enumerate(A.basis()):
            lhs = Element(A, t @ (x * y).coords)
            rhs = images[i] * images[j]
            if lhs != rhs:
                return IdentityWitness(False, (x, y), lhs - rhs)
    return IdentityWitness(True)


@dataclass
class GroupClosure:
    elements: list
    orbit: list
    generators: list
    truncated: bool
    caps: tuple
    saturated: bool = False
    words: int = 0

    @property
    def order(self) -> int:
        return len(self.elements)


def _close(gens, identity, max_group, max_words):
    seen = {identity: None}
    frontier = [identity]
    depth = 0
    truncated = False
    while frontier:
        if depth >= max_words:
            truncated = True
            break
        depth += 1
        nxt = []
        for g in frontier:
            for s in gens:
                h = g @ s
                if h not in seen:
                    seen[h] = None
                    nxt.append(h)
                    if len(seen) >= max_group:
                        return list(seen), True, depth
        frontier = nxt
    return list(seen), truncated, depth


def group_closure(
    A: Algebra,
    profiles,
    max_group: int = DEFAULT_MAX_GROUP,
    max_words: int = DEFAULT_MAX_WORDS,
    saturate: bool = False,
) -> GroupClosure:
    """Group generated by the involutions of the given axes, and the orbit of those axes.

    Only the input axes contribute generators. With ``saturate=True`` the
    primitive axes found in the orbit are added as generators too, and the
    closure repeats until no new generators appear (an extension, off by
    default).
    """
    identity = Matrix.identity(A.field, A.dim)
    gens = []
    for prof in profiles:
        for inv in miyamoto_involutions(A, prof):
            if inv.matrix != identity and all(inv.matrix != g.matrix for g in gens):
                gens.append(inv)
    axes = [p.element for p in profiles]
    known = {x: None for x in axes}
    while True:
        elements, truncated, depth = _close([g.matrix for g in gens], identity, max_group, max_words)
        orbit = {}
        for x in axes:
            for g in elements:
                orbit[Element(A, g @ x.coords)] = None
        orbit = list(orbit)
        if not saturate or truncated:
            break
        added = False
        for y in orbit:
            if y in known:
                continue
            known[y] = None
            prof = analyze_idempotent(A, y)
            if prof.primitive_axis and prof.two_eigenvalue:
                for inv in miyamoto_involutions(A, prof):
                    if inv.matrix != identity and all(inv.matrix != g.matrix for g in gens):
                        gens.append(inv)
                        added = True
        if not added:
            break
    return GroupClosure(elements, orbit, gens, truncated, (max_group, max_words), saturate, depth)


@dataclass
class SpanningReport:
    generates: bool
    orbit_rank: int
    dim: int
    spans: bool | None  # None when the closure was truncated
    stable_hull_dim: int
    stable_hull_is_all: bool
    user_space: dict = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool:
        ok = self.stable_hull_is_all and self.spans is not False
        if self.user_space.get("premises"):
            ok = ok and self.user_space["equals_A"]
        return ok


def _stable_hull(A: Algebra, X, start: Subspace) -> Subspace:
    """Smallest subspace containing ``start`` with xV, Vx ⊆ V for x in X."""
    V = start
    while True:
        vs = [Element(A, v) for v in V.basis]
        grown = V.add([(x * v).coords for x in X for v in vs] + [(v * x).coords for x in X for v in vs])
        if grown == V:
            return V
        V = grown


def check_spanning(A: Algebra, X, closure: GroupClosure, V: Subspace | None = None) -> SpanningReport:
    """Orbit spanning and the stable-subspace criterion for a generating set of axes."""
    for x in X:
        prof = analyze_idempotent(A, x)
        if not (prof.primitive_axis and prof.two_eigenvalue):
            raise HypothesisFailure(f"{x} is a primitive two-eigenvalue axis")
    S = subalgebra_closure(A, X)
    if S.dim != A.dim:
        raise HypothesisFailure("the axes generate the algebra", f"X generates a {S.dim}-dim subalgebra of {A.dim}")
    orbit_rank = A.span(closure.orbit).dim
    spans = None if closure.truncated else orbit_rank == A.dim
    hull = _stable_hull(A, X, A.span(X))
    report = SpanningReport(True, orbit_rank, A.dim, spans, hull.dim, hull.dim == A.dim)
    if V is not None:
        contains = all(V.contains(x.coords) for x in X)
        stable = _stable_hull(A, X, V) == V
        report.user_space = {
            "premises": contains and stable,
            "equals_A": V.dim == A.dim,
        }
    return report


def check_recovery_formulas(A: Algebra, profile: AxisProfile, y: Element, types=None) -> dict:
    """Components of y recovered from y and its images under the three involutions."""
    tl, td, tg = miyamoto_involutions(A, profile, types)
    lam, delta = types if types is not None else infer_types(profile)
    d = decompose(A, profile, y, (lam, delta))
    z = A.field.zero
    y_ld, y_l0, y_0d, y_00 = d.part(lam, delta), d.part(lam, z), d.part(z, delta), d.part(z, z)
    h1 = (y - tl(y)) / 2
    h2 = (y - td(y)) / 2
    h3 = (y - tg(y)) / 2
    return {
        "y_ld + y_l0 = (y - y^tau_l)/2": h1 == y_ld + y_l0,
        "y_ld + y_0d = (y - y^tau_d)/2": h2 == y_ld + y_0d,
        "y_0d + y_l0 = (y - y^tau_diag)/2": h3 == y_0d + y_l0,
        "y_ld from involution images": (h1 + h2 - h3) / 2 == y_ld,
        "y_l0 from involution images": (h1 - h2 + h3) / 2 == y_l0,
        "y_0d from involution images": (h2 + h3 - h1) / 2 == y_0d,
        "alpha a = y - (y_ld + y_0d + y_l0) - y_00": d.alpha * profile.element
        == y - (y_ld + y_0d + y_l0) - y_00,
    }
