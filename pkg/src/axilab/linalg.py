"""Exact linear algebra over Q and GF(p).

Vectors are tuples of field scalars. Matrices and subspaces are immutable;
a subspace is stored by its reduced echelon basis, so two equal subspaces
compare equal structurally.
"""
from __future__ import annotations

from functools import reduce
from math import gcd as igcd

from .errors import DimensionError, InvalidSpectrum, UnsupportedCharacteristic
from .fields import Field


# -- vectors -----------------------------------------------------------------

def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def is_zero_vector(v) -> bool:
    return not any(v)


def unit_vector(field: Field, n: int, i: int):
    z, o = field.zero, field.one
    return tuple(o if k == i else z for k in range(n))


# -- row reduction -----------------------------------------------------------

def _rref_rows(rows, ncols):
    """Return (rref rows without zero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            inv = 1 / lead
            rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[r]
                rows[i] = [x - f * y for x, y in zip(rows[i], ri)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


class Matrix:
    """Dense immutable matrix over a field."""

    __slots__ = ("field", "rows", "ncols", "_hash")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise DimensionError("ragged matrix")
        self._hash = None

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [unit_vector(field, n, i) for i in range(n)], n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [(z,) * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_columns(cls, field: Field, columns, nrows: int | None = None) -> "Matrix":
        columns = list(columns)
        if not columns:
            return cls(field, [() for _ in range(nrows or 0)], 0)
        return cls(field, list(zip(*columns)), len(columns))

    @classmethod
    def diag(cls, field: Field, entries) -> "Matrix":
        entries = [field(e) for e in entries]
        n = len(entries)
        z = field.zero
        return cls(field, [tuple(entries[i] if i == j else z for j in range(n)) for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def columns(self):
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def apply(self, v):
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), z) for row in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"{self.shape} @ {other.shape}")
            cols = other.columns()
            z = self.field.zero
            return Matrix(
                self.field,
                [tuple(sum((a * b for a, b in zip(row, c) if a and b), z) for c in cols) for row in self.rows],
                other.ncols,
            )
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"{self.shape} + {other.shape}")
        return Matrix(self.field, [vadd(r, s) for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"{self.shape} - {other.shape}")
        return Matrix(self.field, [vsub(r, s) for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return Matrix(self.field, [tuple(-x for x in r) for r in self.rows], self.ncols)

    def __rmul__(self, c):
        c = self.field(c)
        return Matrix(self.field, [vscale(c, r) for r in self.rows], self.ncols)

    def shift(self, c) -> "Matrix":
        """Return self - c*Id."""
        c = self.field(c)
        rows = [list(r) for r in self.rows]
        for i in range(min(self.nrows, self.ncols)):
            rows[i][i] = rows[i][i] - c
        return Matrix(self.field, rows, self.ncols)

    def __pow__(self, k: int) -> "Matrix":
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"


def rref(m: Matrix):
    """Reduced row echelon form and rank. Zero rows are kept at the bottom."""
    rows, pivots = _rref_rows(m.rows, m.ncols)
    rank = len(pivots)
    z = m.field.zero
    rows = rows + [(z,) * m.ncols] * (m.nrows - rank)
    return Matrix(m.field, rows, m.ncols), rank


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.rows, m.ncols)[1])


def solve(field: Field, columns, rhs):
    """Coefficients c with sum c_j*columns[j] == rhs, or None if inconsistent."""
    k = len(columns)
    aug = [tuple(col[i] for col in columns) + (rhs[i],) for i in range(len(rhs))]
    rows, pivots = _rref_rows(aug, k + 1)
    if pivots and pivots[-1] == k:
        return None
    coeffs = [field.zero] * k
    for row, c in zip(rows, pivots):
        coeffs[c] = row[k]
    return tuple(coeffs)


# -- subspaces ---------------------------------------------------------------

class Subspace:
    """A subspace of field^n held by its canonical reduced echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, basis=()):
        self.field = field
        self.ambient_dim = ambient_dim
        basis = [tuple(field(x) for x in v) for v in basis]
        if any(len(v) != ambient_dim for v in basis):
            raise DimensionError("vector length does not match ambient dimension")
        rows, pivots = _rref_rows(basis, ambient_dim)
        self.basis = tuple(rows)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        return cls(field, ambient_dim, vectors)

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, [unit_vector(field, n, i) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def contains(self, v) -> bool:
        return is_zero_vector(self.residual(v))

    __contains__ = contains

    def residual(self, v):
        """v minus its projection along the echelon basis; zero iff v lies in self."""
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return tuple(v)

    def coordinates(self, v):
        """Coordinates of v in the echelon basis (v must lie in self)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def add(self, vectors) -> "Subspace":
        return Subspace(self.field, self.ambient_dim, list(self.basis) + list(vectors))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return self.add(other.basis)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    __le__ = issubspace

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(f"ambient {self.ambient_dim} vs {other.ambient_dim}")

    def annihilator(self) -> "Subspace":
        m = Matrix(self.field, self.basis, self.ambient_dim)
        return kernel(m)

    def intersect(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(dim={self.dim}, [{vecs}])"


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0}."""
    f = m.field
    n = m.ncols
    rows, pivots = _rref_rows(m.rows, n)
    pivset = set(pivots)
    vectors = []
    for free in range(n):
        if free in pivset:
            continue
        v = [f.zero] * n
        v[free] = f.one
        for row, c in zip(rows, pivots):
            v[c] = -row[free]
        vectors.append(tuple(v))
    return Subspace(f, n, vectors)


def image(m: Matrix) -> Subspace:
    """Column space of m."""
    return Subspace(m.field, m.nrows, m.columns())


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """u ∩ v, computed as the annihilator of ann(u) + ann(v)."""
    u._check(v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.field, u.ambient_dim)
    n = u.ambient_dim
    stacked = list(u.annihilator().basis) + list(v.annihilator().basis)
    if not stacked:
        return Subspace.full(u.field, n)
    return kernel(Matrix(u.field, stacked, n))


def eigenspace(m: Matrix, value) -> Subspace:
    return kernel(m.shift(value))


# -- polynomials -------------------------------------------------------------

class Polynomial:
    """Univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Polynomial":
        p = cls(field, [1])
        for r in roots:
            p = p * cls(field, [-field(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = 1 / self.lead
        return Polynomial(self.field, [inv * c for c in self.coeffs])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return Polynomial(self.field, [x + y for x, y in zip(a, b)])

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.field(other)
            return Polynomial(self.field, [c * x for x in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field, [])
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        q = [f.zero] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = 1 / other.lead
        d = other.degree
        while len(rem) - 1 >= d and rem:
            shift = len(rem) - 1 - d
            c = rem[-1] * inv
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return Polynomial(f, q), Polynomial(f, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(self.field, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: Matrix) -> Matrix:
        n = m.nrows
        acc = Matrix.zeros(self.field, n, n)
        for c in reversed(self.coeffs):
            acc = (acc @ m).shift(-c)
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1 and self.field.kind == "Q":
                s = "-" + mono
            else:
                s = f"{c}{'*' + mono if mono else ''}"
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Monic least-degree polynomial annihilating a square matrix.

    Finds the first power m^k that is a linear combination of the lower
    powers (Krylov sequence in matrix space, solved exactly).
    """
    if m.nrows != m.ncols:
        raise DimensionError("minimal polynomial of a non-square matrix")
    f = m.field
    n = m.nrows
    flat = lambda x: tuple(e for r in x.rows for e in r)
    powers = [flat(Matrix.identity(f, n))]
    current = Matrix.identity(f, n)
    for k in range(1, n + 1):
        current = current @ m
        target = flat(current)
        coeffs = solve(f, powers, target)
        if coeffs is not None:
            return Polynomial(f, [-c for c in coeffs] + [f.one])
        powers.append(target)
    raise AssertionError("Cayley-Hamilton bound exceeded")  # unreachable


def squarefree(p: Polynomial) -> bool:
    """True iff p has no repeated factor (gcd(p, p') constant)."""
    if p.is_zero():
        raise ValueError("squarefree test of the zero polynomial")
    if p.field.is_finite and p.degree >= p.field.modulus:
        raise UnsupportedCharacteristic(
            f"derivative test needs degree < {p.field.modulus}, got {p.degree}"
        )
    return poly_gcd(p, p.derivative()).degree == 0


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def roots_in_field(p: Polynomial, field: Field | None = None):
    """Distinct roots of p lying in the field, sorted canonically."""
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    field = field or p.field
    if field.is_finite:
        return [x for x in field.elements() if not p(x)]
    # rational root theorem on the primitive integer form
    from fractions import Fraction

    den = reduce(lambda a, b: a * b // igcd(a, b), (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    roots = set()
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    ints = ints[k:]
    if len(ints) > 1:
        for num in _divisors(ints[0]):
            for d in _divisors(ints[-1]):
                for cand in (Fraction(num, d), Fraction(-num, d)):
                    if cand not in roots and not p(cand):
                        roots.add(cand)
    return sorted(roots)


def spectral_projector(m: Matrix, eigenvalues, target) -> Matrix:
    """Lagrange projector prod_{mu != target} (m - mu)/(target - mu)."""
    f = m.field
    eigs = [f(e) for e in eigenvalues]
    target = f(target)
    if len(set(eigs)) != len(eigs):
        raise InvalidSpectrum(f"repeated eigenvalues in {eigs}")
    if target not in eigs:
        raise InvalidSpectrum(f"{target} is not among {eigs}")
    P = Matrix.identity(f, m.nrows)
    for mu in eigs:
        if mu == target:
            continue
        P = (1 / (target - mu)) * (P @ m.shift(mu))
    return P

