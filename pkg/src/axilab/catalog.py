"""Built-in algebras: the two non-flexible axis examples plus standard references."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import Algebra, Element
from .errors import BadParams
from .fields import Field, Q

_ALIASES = {"lambda": "l", "delta": "d"}


def from_products(field: Field, labels, products) -> Algebra:
    """Build an algebra from {(u, v): {w: coeff}}; unlisted products are zero."""
    labels = list(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for (u, v), terms in products.items():
        cell = table[idx[u]][idx[v]]
        for w, c in terms.items():
            cell[idx[w]] = cell[idx[w]] + field(c)
    return Algebra(field, labels, table)


def _type_param(field: Field, params, key, default):
    raw = params.get(key, default)
    value = field(raw)
    if value == 0 or value == 1:
        raise BadParams(f"{key} must avoid 0 and 1, got {raw}")
    return value


def _ex_nonflex_3(field: Field, params):
    lam = _type_param(field, params, "l", "1/2")
    delta = _type_param(field, params, "d", "1/3")
    A = from_products(
        field,
        ["a", "x", "y"],
        {
            ("a", "a"): {"a": 1},
            ("x", "x"): {"a": 1},
            ("y", "y"): {"a": 1},
            ("a", "x"): {"x": lam},
            ("y", "a"): {"y": delta},
        },
    )
    return A, {"l": lam, "d": delta}


def _ex_nonflex_5(field: Field, params):
    lam = _type_param(field, params, "l", "1/2")
    if "d" in params:
        delta = _type_param(field, params, "d", None)
        if lam + delta != 1:
            raise BadParams(f"ex-nonflex-5 needs l + d = 1, got {lam} + {delta}")
    else:
        delta = 1 - lam
        if delta == 0 or delta == 1:
            raise BadParams(f"d = 1 - l = {delta} must avoid 0 and 1")
    A = from_products(
        field,
        ["a", "c", "x", "y", "z"],
        {
            ("a", "a"): {"a": 1},
            ("a", "x"): {"x": lam},
            ("y", "a"): {"y": delta},
            ("a", "z"): {"z": lam},
            ("z", "a"): {"z": delta},
            ("x", "x"): {"c": -1},
            ("x", "z"): {"y": lam},
            ("y", "y"): {"c": 1},
            ("y", "z"): {"x": delta},
        },
    )
    return A, {"l": lam, "d": delta}


def _diag_2(field: Field, params):
    return from_products(field, ["e1", "e2"], {("e1", "e1"): {"e1": 1}, ("e2", "e2"): {"e2": 1}}), {}


def _mat_2(field: Field, params):
    labels = ["e11", "e12", "e21", "e22"]
    prods = {}
    for i in "12":
        for j in "12":
            for k in "12":
                # e_ij e_jk = e_ik
                prods[(f"e{i}{j}", f"e{j}{k}")] = {f"e{i}{k}": 1}
    return from_products(field, labels, prods), {}


def _jordan_sym2(field: Field, params):
    if field.char == 2:
        raise BadParams("jordan-sym2 needs characteristic != 2")
    half = field(1) / 2
    # s12 stands for e12 + e21
    A = from_products(
        field,
        ["e11", "e22", "s12"],
        {
            ("e11", "e11"): {"e11": 1},
            ("e22", "e22"): {"e22": 1},
            ("e11", "s12"): {"s12": half},
            ("s12", "e11"): {"s12": half},
            ("e22", "s12"): {"s12": half},
            ("s12", "e22"): {"s12": half},
            ("s12", "s12"): {"e11": 1, "e22": 1},
        },
    )
    return A, {}


def _landmarks_3(A):
    return {"a": A.e("a")}


def _landmarks_5(A):
    a, c, x, y, z = A.basis()
    return {"a": a, "b": a + c + x + y + z}


def _landmarks_diag(A):
    return {"e1": A.e("e1"), "e2": A.e("e2")}


def _landmarks_mat(A):
    return {"e11": A.e("e11"), "e22": A.e("e22")}


def _landmarks_jordan(A):
    e11, e22, s = A.basis()
    half = A.field(1) / 2
    return {"e11": e11, "e22": e22, "u": half * (e11 + e22 + s), "v": half * (e11 + e22 - s)}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable
    provenance: str
    defaults: dict = dc_field(default_factory=dict)
    landmarks: Callable | None = None

    def build(self, params=None, field: Field = Q):
        params = {_ALIASES.get(k, k): v for k, v in (params or {}).items()}
        unknown = set(params) - set(self.defaults)
        if unknown:
            raise BadParams(f"{self.name} takes {sorted(self.defaults) or 'no params'}, got {sorted(unknown)}")
        return self.builder(field, params)


ENTRIES = {
    e.name: e
    for e in [
        CatalogEntry(
            "ex-nonflex-3",
            _ex_nonflex_3,
            "non-flexible primitive axis a of type (l; d), not of Jordan type; "
            "basis (a, x, y) as used in the multiplication table",
            {"l": "1/2", "d": "1/3"},
            _landmarks_3,
        ),
        CatalogEntry(
            "ex-nonflex-5",
            _ex_nonflex_5,
            "5-dim algebra with non-flexible axis a; b = a + c + x + y + z is idempotent when l + d = 1",
            {"l": "1/2", "d": "1 - l"},
            _landmarks_5,
        ),
        CatalogEntry("diag-2", _diag_2, "F x F with componentwise product", {}, _landmarks_diag),
        CatalogEntry("mat-2", _mat_2, "full 2x2 matrix algebra, basis of matrix units", {}, _landmarks_mat),
        CatalogEntry(
            "jordan-sym2",
            _jordan_sym2,
            "standard reference algebra: symmetric 2x2 matrices under x.y = (xy + yx)/2, "
            "basis (e11, e22, s12 = e12 + e21)",
            {},
            _landmarks_jordan,
        ),
    ]
}


def names():
    return list(ENTRIES)


def entry(name: str) -> CatalogEntry:
    try:
        return ENTRIES[name]
    except KeyError:
        raise BadParams(f"unknown catalog entry {name!r}; known: {', '.join(ENTRIES)}") from None


def get(name: str, params=None, field: Field = Q) -> Algebra:
    return entry(name).build(params, field)[0]


def resolved_params(name: str, params=None, field: Field = Q) -> dict:
    return entry(name).build(params, field)[1]


def landmarks(name: str, A: Algebra) -> dict[str, Element]:
    e = entry(name)
    return e.landmarks(A) if e.landmarks else {}
