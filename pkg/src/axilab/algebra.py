"""Algebras given by structure constants, their elements, and identity checks."""
from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, FieldMismatch, NotIdempotent, UnsupportedCharacteristic
from .fields import Field
from .linalg import Matrix, Subspace, solve, unit_vector

DEFAULT_SEED = 20240611


def default_seed() -> int:
    return int(os.environ.get("AXILAB_SEED", DEFAULT_SEED))


class Element:
    """A vector in an algebra, with the algebra product on ``*``."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "Algebra", coords):
        f = algebra.field
        coords = tuple(f(c) for c in coords)
        if len(coords) != algebra.dim:
            raise DimensionError(f"{len(coords)} coordinates for a {algebra.dim}-dim algebra")
        self.algebra = algebra
        self.coords = coords

    def _same(self, other: "Element"):
        if other.algebra is not self.algebra:
            if other.algebra.field != self.algebra.field:
                raise FieldMismatch(f"{other.algebra.field} vs {self.algebra.field}")
            if other.algebra.dim != self.algebra.dim:
                raise DimensionError("elements of different algebras")

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        c = self.algebra.field(other)
        return Element(self.algebra, [c * a for a in self.coords])

    def __rmul__(self, c):
        c = self.algebra.field(c)
        return Element(self.algebra, [c * a for a in self.coords])

    def __truediv__(self, c):
        inv = 1 / self.algebra.field(c)
        return Element(self.algebra, [inv * a for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        return self.algebra.format_element(self)


@dataclass(frozen=True)
class IdentityWitness:
    """Outcome of an identity check; on failure, the inputs and the nonzero residual."""

    holds: bool
    witness: tuple = ()
    residual: Element | None = None
    note: str = ""

    def __bool__(self):
        return self.holds


class Algebra:
    """Finite-dimensional algebra over a field.

    ``table[i][j]`` is the coordinate vector of e_i * e_j. No identity,
    associativity or commutativity is assumed.
    """

    def __init__(self, field: Field, labels, table):
        labels = tuple(labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise ValueError(f"duplicate basis labels in {labels}")
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionError("structure table must be n x n x n")
        self.field = field
        self.labels = labels
        self.dim = n
        self.table = tuple(tuple(tuple(field(c) for c in cell) for cell in row) for row in table)
        if any(len(cell) != n for row in self.table for cell in row):
            raise DimensionError("structure table must be n x n x n")
        self._sparse = [[[(k, c) for k, c in enumerate(cell) if c] for cell in row] for row in self.table]
        self._index = {lab: i for i, lab in enumerate(labels)}

    # -- elements --------------------------------------------------------

    def element(self, coords) -> Element:
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, [0] * self.dim)

    def e(self, key) -> Element:
        i = self._index[key] if isinstance(key, str) else key
        return Element(self, unit_vector(self.field, self.dim, i))

    def basis(self):
        return [self.e(i) for i in range(self.dim)]

    def index(self, label: str) -> int:
        return self._index[label]

    def format_element(self, x: Element) -> str:
        parts = []
        for c, lab in zip(x.coords, self.labels):
            if not c:
                continue
            if c == 1:
                parts.append(lab)
            elif self.field.kind == "Q" and c == -1:
                parts.append("-" + lab)
            else:
                parts.append(f"{c}*{lab}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def random_element(self, rng: random.Random, bound: int = 4) -> Element:
        f = self.field
        if f.is_finite:
            return Element(self, [rng.randrange(f.modulus) for _ in range(self.dim)])
        return Element(
            self,
            [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(self.dim)],
        )

    # -- products and operators -------------------------------------------

    def _coords(self, x):
        if isinstance(x, Element):
            if x.algebra is not self and x.algebra.field != self.field:
                raise FieldMismatch(f"element over {x.algebra.field} used in algebra over {self.field}")
            return x.coords
        return tuple(self.field(c) for c in x)

    def multiply(self, x, y) -> Element:
        xs, ys = self._coords(x), self._coords(y)
        if len(xs) != self.dim or len(ys) != self.dim:
            raise DimensionError("element length does not match algebra dimension")
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(xs):
            if not xi:
                continue
            row = self._sparse[i]
            for j, yj in enumerate(ys):
                if not yj:
                    continue
                cell = row[j]
                if not cell:
                    continue
                w = xi * yj
                for k, c in cell:
                    out[k] = out[k] + w * c
        return Element(self, out)

    def left_operator(self, u) -> Matrix:
        """Matrix of v -> u*v in the standard basis."""
        cols = [self.multiply(u, e).coords for e in self.basis()]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_operator(self, u) -> Matrix:
        """Matrix of v -> v*u in the standard basis."""
        cols = [self.multiply(e, u).coords for e in self.basis()]
        return Matrix.from_columns(self.field, cols, self.dim)

    def unit(self) -> Element | None:
        """The two-sided multiplicative identity, if there is one."""
        n = self.dim
        if n == 0:
            return None
        # u*e_j = e_j and e_j*u = e_j, linear in u
        columns = []
        for i in range(n):
            col = []
            for j in range(n):
                col.extend(self.table[i][j])
                col.extend(self.table[j][i])
            columns.append(tuple(col))
        rhs = []
        for j in range(n):
            ej = unit_vector(self.field, n, j)
            rhs.extend(ej)
            rhs.extend(ej)
        coeffs = solve(self.field, columns, rhs)
        return None if coeffs is None else Element(self, coeffs)

    def span(self, elements) -> Subspace:
        return Subspace(self.field, self.dim, [self._coords(x) for x in elements])

    def restrict(self, space: Subspace) -> "Subalgebra":
        return Subalgebra(self, space)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.field, self.labels, self.table) == (other.field, other.labels, other.table)

    def __hash__(self):
        return hash((self.field, self.labels, self.table))

    def __repr__(self):
        return f"Algebra({self.field}, {' '.join(self.labels)})"


class Subalgebra:
    """A multiplicatively closed subspace viewed as an algebra in its own right."""

    def __init__(self, parent: Algebra, space: Subspace):
        self.parent = parent
        self.space = space
        basis = [Element(parent, v) for v in space.basis]
        units = [sum(1 for c in v if c) == 1 for v in space.basis]
        if all(units):
            labels = [parent.labels[space.pivots[i]] for i in range(space.dim)]
        else:
            labels = [f"s{i + 1}" for i in range(space.dim)]
        table = []
        for u in basis:
            row = []
            for v in basis:
                prod = parent.multiply(u, v)
                if not space.contains(prod.coords):
                    raise ValueError("subspace is not closed under multiplication")
                row.append(space.coordinates(prod.coords))
            table.append(row)
        self.algebra = Algebra(parent.field, labels, table)

    def project(self, x: Element) -> Element:
        return Element(self.algebra, self.space.coordinates(x.coords))

    def embed(self, x: Element) -> Element:
        out = self.parent.zero()
        for c, v in zip(x.coords, self.space.basis):
            if c:
                out = out + c * Element(self.parent, v)
        return out


# -- module-level operations -------------------------------------------------

def multiply(A: Algebra, x, y) -> Element:
    return A.multiply(x, y)


def left_operator(A: Algebra, u) -> Matrix:
    return A.left_operator(u)


def right_operator(A: Algebra, u) -> Matrix:
    return A.right_operator(u)


def subalgebra_closure(A: Algebra, gens, cap: int | None = None) -> Subspace:
    """Smallest subspace containing gens and closed under the product."""
    cap = cap if cap is not None else A.dim + 2
    S = A.span(gens)
    for _ in range(cap):
        basis = [Element(A, v) for v in S.basis]
        products = [(u * v).coords for u in basis for v in basis]
        grown = S.add(products)
        if grown == S:
            return S
        S = grown
    raise RuntimeError(f"subalgebra closure did not stabilise within {cap} rounds")


def check_commutative(A: Algebra) -> IdentityWitness:
    for i, j in itertools.combinations(range(A.dim), 2):
        if A.table[i][j] != A.table[j][i]:
            x, y = A.e(i), A.e(j)
            return IdentityWitness(False, (x, y), x * y - y * x)
    return IdentityWitness(True)


def _first_failure(cases, expr):
    for args in cases:
        r = expr(*args)
        if r:
            return args, r
    return None


def check_flexible(A: Algebra) -> IdentityWitness:
    """(xy)x = x(yx) for all x, y.

    Raw identity on basis pairs plus its linearization
    (xy)z + (zy)x - x(yz) - z(yx) on basis triples; together they cover
    every characteristic.
    """
    B = A.basis()
    raw = _first_failure(
        itertools.product(B, B), lambda x, y: (x * y) * x - x * (y * x)
    )
    if raw:
        return IdentityWitness(False, raw[0], raw[1], "raw")
    lin = _first_failure(
        itertools.product(B, B, B),
        lambda x, y, z: (x * y) * z + (z * y) * x - x * (y * z) - z * (y * x),
    )
    if lin:
        return IdentityWitness(False, lin[0], lin[1], "linearized")
    return IdentityWitness(True)


def _is_idempotent(a: Element) -> bool:
    return a * a == a


def check_flexible_idempotent(A: Algebra, a: Element) -> IdentityWitness:
    """(ax)a = a(xa) and (xa)x = x(ax) for all x."""
    if not _is_idempotent(a):
        raise NotIdempotent(f"{a} is not idempotent")
    B = A.basis()
    first = _first_failure(((x,) for x in B), lambda x: (a * x) * a - a * (x * a))
    if first:
        return IdentityWitness(False, first[0], first[1], "(ax)a = a(xa)")
    raw = _first_failure(((x,) for x in B), lambda x: (x * a) * x - x * (a * x))
    if raw:
        return IdentityWitness(False, raw[0], raw[1], "(xa)x = x(ax)")
    lin = _first_failure(
        itertools.product(B, B),
        lambda x, y: (x * a) * y + (y * a) * x - x * (a * y) - y * (a * x),
    )
    if lin:
        return IdentityWitness(False, lin[0], lin[1], "(xa)y + (ya)x = x(ay) + y(ax)")
    return IdentityWitness(True)


def check_pa_degree4(A: Algebra) -> IdentityWitness:
    """Degree-4 probe of power-associativity: x^2 x^2 = (x^2 x)x = x(x x^2).

    Both identities are fully polarized over basis 4-tuples, which is exact
    when 24 is invertible. Passing is necessary, not sufficient, for
    power-associativity.
    """
    if A.field.char in (2, 3):
        raise UnsupportedCharacteristic("degree-4 probe needs characteristic 0 or >= 5")
    B = A.basis()
    note = "degree-4 probe"
    for x in B:
        x2 = x * x
        for r in (x2 * x2 - (x2 * x) * x, x2 * x2 - x * (x * x2)):
            if r:
                return IdentityWitness(False, (x,), r, note)
    for idx in itertools.combinations_with_replacement(range(A.dim), 4):
        xs = [B[i] for i in idx]
        r1 = A.zero()
        r2 = A.zero()
        for p, q, r, s in itertools.permutations(range(4)):
            u, v, w, t = xs[p], xs[q], xs[r], xs[s]
            uv = u * v
            r1 = r1 + uv * (w * t) - (uv * w) * t
            r2 = r2 + uv * (w * t) - u * (v * (w * t))
        for res in (r1, r2):
            if res:
                return IdentityWitness(False, tuple(xs), res, note)
    return IdentityWitness(True, note=note)
