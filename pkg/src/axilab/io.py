"""Algebra file format, element expressions and JSON-ready reports.

File format (line oriented, '#' starts a comment)::

    field Q            # or: field GF 5
    dim 3
    basis a x y
    prod a a = 1 a
    prod a x = 1/2 x

Unlisted products are zero.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Algebra, Element
from .errors import FieldMismatch, ParseError
from .fields import Field, Q, Residue

_LABEL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")
_SCALAR_RE = re.compile(r"[+-]?\d+(?:/\d+)?$")


def _parse_field(args, lineno) -> Field:
    if args == ["Q"]:
        return Q
    if len(args) == 2 and args[0] == "GF" and args[1].isdigit():
        try:
            return Field.gf(int(args[1]))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    raise ParseError(f"expected 'field Q' or 'field GF <p>', got {' '.join(args)!r}", lineno)


def _scalar(field: Field, tok: str, lineno: int):
    if not _SCALAR_RE.match(tok):
        raise ParseError(f"bad scalar {tok!r}", lineno)
    try:
        return field.parse(tok)
    except FieldMismatch as exc:
        raise ParseError(f"field mismatch: {exc}", lineno) from None
    except ParseError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_algebra(text: str) -> Algebra:
    field = None
    dim = None
    labels = None
    index = {}
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        if head == "field":
            if field is not None:
                raise ParseError("field declared twice", lineno)
            field = _parse_field(args, lineno)
        elif head == "dim":
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError(f"expected 'dim <n>', got {line!r}", lineno)
            dim = int(args[0])
        elif head == "basis":
            if labels is not None:
                raise ParseError("basis declared twice", lineno)
            for lab in args:
                if not _LABEL_RE.match(lab):
                    raise ParseError(f"bad basis label {lab!r}", lineno)
            if len(set(args)) != len(args):
                raise ParseError("duplicate basis label", lineno)
            if dim is not None and len(args) != dim:
                raise ParseError(f"dim {dim} but {len(args)} basis labels", lineno)
            labels = args
            index = {lab: i for i, lab in enumerate(labels)}
        elif head == "prod":
            if field is None or labels is None:
                raise ParseError("prod before field and basis declarations", lineno)
            if len(args) < 5 or args[2] != "=" or len(args) % 2 == 0:
                raise ParseError("expected 'prod <u> <v> = <scalar> <label> ...'", lineno)
            u, v = args[0], args[1]
            for lab in (u, v):
                if lab not in index:
                    raise ParseError(f"unknown label {lab!r}", lineno)
            key = (index[u], index[v])
            if key in rules:
                raise ParseError(f"duplicate product rule for {u} {v} (first at line {rules[key][0]})", lineno)
            cell = [field.zero] * len(labels)
            terms = args[3:]
            for k in range(0, len(terms), 2):
                c, w = terms[k], terms[k + 1]
                if w not in index:
                    raise ParseError(f"unknown label {w!r}", lineno)
                cell[index[w]] = cell[index[w]] + _scalar(field, c, lineno)
            rules[key] = (lineno, cell)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if field is None:
        raise ParseError("missing 'field' line")
    if labels is None:
        raise ParseError("missing 'basis' line")
    if dim is not None and dim != len(labels):
        raise ParseError(f"dim {dim} but {len(labels)} basis labels")
    n = len(labels)
    table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), (_, cell) in rules.items():
        table[i][j] = cell
    return Algebra(field, labels, table)


def format_scalar(x) -> str:
    if isinstance(x, Residue):
        return str(x.v)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_algebra(A: Algebra) -> str:
    lines = [f"field {A.field}", f"dim {A.dim}", "basis " + " ".join(A.labels)]
    for i, u in enumerate(A.labels):
        for j, v in enumerate(A.labels):
            cell = A.table[i][j]
            terms = [f"{format_scalar(c)} {w}" for c, w in zip(cell, A.labels) if c]
            if terms:
                lines.append(f"prod {u} {v} = " + " ".join(terms))
    return "\n".join(lines) + "\n"


# -- element expressions -------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|([A-Za-z_][A-Za-z0-9_']*)|([+\-*]))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        col = m.start(m.lastindex) + 1
        kind = ("num", "label", "op")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex), col))
        pos = m.end()
    return out


def parse_element(text: str, A: Algebra) -> Element:
    """Parse a linear combination such as ``3/2*x - y`` or ``1/2 a + 2``.

    A bare scalar means that multiple of the identity, when A has one.
    """
    toks = _tokens(text)
    F = A.field
    if not toks:
        raise ParseError("empty expression", column=1)
    total = [F.zero] * A.dim
    unit = None
    i = 0
    sign = 1
    expect_term = True
    while i < len(toks):
        kind, val, col = toks[i]
        if expect_term:
            if kind == "op" and val in "+-" and i == 0:
                sign = -1 if val == "-" else 1
                i += 1
                continue
            coeff = F.one
            have_num = False
            if kind == "num":
                try:
                    coeff = F.parse(val.replace(" ", ""))
                except FieldMismatch as exc:
                    raise ParseError(f"field mismatch: {exc}", column=col) from None
                except ParseError as exc:
                    raise ParseError(str(exc), column=col) from None
                have_num = True
                i += 1
                if i < len(toks) and toks[i][:2] == ("op", "*"):
                    i += 1
                    if i >= len(toks) or toks[i][0] != "label":
                        c = toks[i][2] if i < len(toks) else len(text) + 1
                        raise ParseError("expected a basis label after '*'", column=c)
            if i < len(toks) and toks[i][0] == "label":
                _, lab, lcol = toks[i]
                if lab not in A.labels:
                    raise ParseError(f"unknown label {lab!r}", column=lcol)
                k = A.index(lab)
                total[k] = total[k] + sign * coeff
                i += 1
            elif have_num:
                if unit is None:
                    unit = A.unit()
                    if unit is None:
                        raise ParseError("bare scalar but the algebra has no identity", column=col)
                total = [t + sign * coeff * u for t, u in zip(total, unit.coords)]
            else:
                raise ParseError(f"expected a term, got {val!r}", column=col)
            expect_term = False
        else:
            if kind != "op" or val not in "+-":
                raise ParseError(f"expected '+' or '-', got {val!r}", column=col)
            sign = -1 if val == "-" else 1
            expect_term = True
            i += 1
    if expect_term:
        raise ParseError("expression ends with an operator", column=len(text) + 1)
    return Element(A, total)


# -- reports -------------------------------------------------------------------

def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(_key(x) for x in k)
    if isinstance(k, (Fraction, Residue)):
        return format_scalar(k)
    return str(k)


def jsonable(obj):
    """Convert scalars, elements and containers into JSON-friendly values."""
    if isinstance(obj, Element):
        return jsonable(list(obj.coords))
    if isinstance(obj, Residue):
        return obj.v
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return str(obj)
