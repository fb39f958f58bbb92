"""Exhaustive search over algebras defined over small prime fields."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, Element, subalgebra_closure
from .axes import AxisProfile, analyze_idempotent, infer_types
from .errors import RationalsUnsupported, SearchSpaceTooLarge, TypeShapeError, UnsupportedCharacteristic

CHUNK = 1 << 16


@dataclass(frozen=True)
class SearchConfig:
    max_elements: int = 10**7
    require_primitive: bool = True
    type_filter: tuple | None = None  # ((lam, delta), ...)
    workers: int = 1


def _check_space(A: Algebra, cfg: SearchConfig):
    if not A.field.is_finite:
        raise RationalsUnsupported("exhaustive search needs a finite prime field, not Q")
    size = A.field.char ** A.dim
    if size > cfg.max_elements:
        raise SearchSpaceTooLarge(f"{A.field.char}^{A.dim} = {size} elements exceeds the limit {cfg.max_elements}")


def structure_tensor(A: Algebra) -> np.ndarray:
    n = A.dim
    C = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            C[i, j] = [int(c) for c in A.table[i][j]]
    return C


def _digits(start: int, stop: int, p: int, n: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    cols = [(idx // p ** (n - 1 - k)) % p for k in range(n)]
    return np.stack(cols, axis=1) if n else np.zeros((stop - start, 0), dtype=np.int64)


def _scan_partition(C: np.ndarray, p: int, n: int, lead: int) -> np.ndarray:
    """Idempotent coordinate rows whose first coordinate equals ``lead``."""
    block = p ** (n - 1)
    base = lead * block
    found = []
    for s in range(0, block, CHUNK):
        X = _digits(base + s, base + min(block, s + CHUNK), p, n)
        outer = (X[:, :, None] * X[:, None, :]) % p
        sq = np.tensordot(outer, C, axes=([1, 2], [0, 1])) % p
        hit = np.all(sq == X, axis=1)
        if hit.any():
            found.append(X[hit])
    return np.concatenate(found) if found else np.zeros((0, n), dtype=np.int64)


def _scan_task(args):
    return _scan_partition(*args)


def enumerate_idempotents(A: Algebra, cfg: SearchConfig | None = None) -> list:
    """All x with x^2 = x, in lexicographic coordinate order (0 included)."""
    cfg = cfg or SearchConfig()
    _check_space(A, cfg)
    p, n = A.field.char, A.dim
    if n == 0:
        return [A.zero()]
    C = structure_tensor(A)
    tasks = [(C, p, n, lead) for lead in range(p)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(_scan_task, tasks))
    else:
        parts = [_scan_task(t) for t in tasks]
    F = A.field
    return [Element(A, [F(int(c)) for c in row]) for part in parts for row in part]


def _types_of(profile: AxisProfile):
    try:
        return infer_types(profile)
    except (TypeShapeError, UnsupportedCharacteristic):
        return None


def enumerate_axes(A: Algebra, cfg: SearchConfig | None = None) -> list:
    """Profiles of the nonzero idempotents that are axes, filtered by ``cfg``."""
    cfg = cfg or SearchConfig()
    _check_space(A, cfg)
    if A.field.char < 5:
        raise UnsupportedCharacteristic("axis enumeration needs p >= 5")
    out = []
    for x in enumerate_idempotents(A, cfg):
        if not x:
            continue
        prof = analyze_idempotent(A, x)
        if not prof.axis:
            continue
        if cfg.require_primitive and not prof.primitive:
            continue
        if cfg.type_filter is not None:
            t = _types_of(prof)
            F = A.field
            wanted = {(F(l), F(d)) for l, d in cfg.type_filter}
            if t is None or t not in wanted:
                continue
        out.append(prof)
    return out


@dataclass(frozen=True)
class CensusRow:
    axis_pair: tuple
    types: tuple
    generated_dim: int
    jordan_flags: tuple

    @property
    def contradiction(self) -> bool:
        return self.generated_dim == 4 or self.generated_dim > 5


def census_from_profiles(A: Algebra, profiles) -> list:
    """Rows for unordered pairs of distinct primitive axes with involutory fusion."""
    good = [p for p in profiles if p.primitive_axis and p.two_eigenvalue]
    rows = []
    for i, pa in enumerate(good):
        for pb in good[i + 1:]:
            S = subalgebra_closure(A, [pa.element, pb.element])
            rows.append(
                CensusRow(
                    (pa.element, pb.element),
                    (infer_types(pa), infer_types(pb)),
                    S.dim,
                    (pa.jordan_type, pb.jordan_type),
                )
            )
    return rows


def pair_census(A: Algebra, cfg: SearchConfig | None = None) -> list:
    cfg = cfg or SearchConfig()
    return census_from_profiles(A, enumerate_axes(A, cfg))
