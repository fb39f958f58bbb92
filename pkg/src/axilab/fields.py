"""Base fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values. Residues
mod p are :class:`Residue` objects, which support the same operators, so
the linear algebra on top is written once for both fields.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, ParseError

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Residue:
    """An element of GF(p), always stored reduced into [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldMismatch(f"{other} is not defined in GF({self.p})")
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __lt__(self, other):
        return self.v < self._coerce(other) % self.p

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """Field descriptor: ``Field.Q`` or ``Field.gf(p)``."""

    kind: str  # "Q" or "GF"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "GF":
            if self.modulus is None or not is_prime(self.modulus):
                raise ValueError(f"GF modulus must be prime, got {self.modulus}")
        elif self.kind == "Q":
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls("GF", p)

    @property
    def char(self) -> int:
        return 0 if self.kind == "Q" else self.modulus

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Coerce an int, Fraction, Residue or scalar string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "Q":
            if isinstance(value, Residue):
                raise FieldMismatch(f"residue {value} mod {value.p} used over Q")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into Q")
        p = self.modulus
        if isinstance(value, Residue):
            if value.p != p:
                raise FieldMismatch(f"residue mod {value.p} used over GF({p})")
            return value
        if isinstance(value, int):
            return Residue(value, p)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldMismatch(f"{value} is not defined in GF({p})")
            return Residue(value.numerator * pow(value.denominator, -1, p), p)
        raise TypeError(f"cannot coerce {value!r} into GF({p})")

    def parse(self, text: str):
        m = _SCALAR_RE.match(text)
        if not m:
            raise ParseError(f"bad scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return self(Fraction(num, den))

    def contains(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, Fraction)
        return isinstance(x, Residue) and x.p == self.modulus

    def elements(self):
        if not self.is_finite:
            raise ValueError("the rationals cannot be enumerated")
        return [Residue(v, self.modulus) for v in range(self.modulus)]

    def sort_key(self, x):
        return x if self.kind == "Q" else x.v

    def format(self, x) -> str:
        """Human form: '1/2', '-3', residues as integers."""
        return str(x)

    def to_json(self, x):
        """Machine form: rationals as 'num/den' strings, residues as ints."""
        if self.kind == "Q":
            return f"{x.numerator}/{x.denominator}"
        return x.v

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF {self.modulus}"


Q = Field("Q")
