"""Isomorphism testing and direct-sum decomposition of modules.

Both rest on the trace form of the endomorphism ring acting on the module:
over the rationals its radical is rad End(M), so ``rank`` of the Gram matrix
``tr(f g)`` is ``dim End(M) / rad End(M)``.
"""

from __future__ import annotations

import random
from itertools import product

from .linalg import Matrix, is_invertible, rank, q
from .modules import (
    Module,
    Morphism,
    _same_algebra,
    hom_basis,
    identity,
    image,
    kernel,
    linear_combination,
    socle_dims,
    top_dims,
)

GRID_RADIUS = 3
TRIALS_PER_RADIUS = 12
EXHAUSTIVE_LIMIT = 400


class Inconclusive(RuntimeError):
    """The invertible-element search exhausted its grid without a decision."""


class SplitNotFound(RuntimeError):
    """The module is decomposable but no splitting endomorphism was located."""


def _trace_of_product(f: Morphism, g: Morphism) -> object:
    """tr(f then g) for f: X -> Y, g: Y -> X, as a linear map on X."""
    total = 0
    for a, b in zip(f.blocks, g.blocks):
        for p, row in enumerate(a.data):
            for r, x in enumerate(row):
                if x:
                    y = b.data[r][p]
                    if y:
                        total += x * y
    return total


def end_semisimple_rank(m: Module) -> int:
    """dim End(m) / rad End(m)."""
    key = "end_ss_rank"
    if key not in m._cache:
        ends = hom_basis(m, m)
        if not ends:
            m._cache[key] = 0
        else:
            gram = [[_trace_of_product(f, g) for g in ends] for f in ends]
            m._cache[key] = rank(Matrix(gram, len(ends)))
    return m._cache[key]


def is_indecomposable(m: Module) -> bool:
    return m.dim > 0 and end_semisimple_rank(m) == 1


def fingerprint(m: Module) -> tuple:
    if "fingerprint" not in m._cache:
        m._cache["fingerprint"] = (m.dims, top_dims(m), socle_dims(m), len(hom_basis(m, m)))
    return m._cache["fingerprint"]


def _is_iso_map(f: Morphism) -> bool:
    for b in f.blocks:
        if b.rows != b.cols:
            return False
        if b.rows and not is_invertible(b):
            return False
    return True


def _candidates(h: int):
    yield (1,) * h
    for radius in range(1, GRID_RADIUS + 1):
        if (2 * radius + 1) ** h <= EXHAUSTIVE_LIMIT:
            for c in product(range(-radius, radius + 1), repeat=h):
                if any(c):
                    yield c
            continue
        rng = random.Random(radius)
        for _ in range(TRIALS_PER_RADIUS):
            yield tuple(rng.randint(-radius, radius) for _ in range(h))


def find_isomorphism(m: Module, n: Module) -> Morphism | None:
    """Search integer combinations of a Hom basis for an invertible map."""
    maps = hom_basis(m, n)
    if not maps:
        return None
    for c in _candidates(len(maps)):
        f = linear_combination(m, n, c, maps)
        if _is_iso_map(f):
            return f
    return None


def _indecomposables_isomorphic(x: Module, y: Module) -> bool:
    # End(x) local with residue field Q: g o f in End(x) is a unit iff its trace is nonzero
    fs = hom_basis(x, y)
    gs = hom_basis(y, x)
    return any(_trace_of_product(f, g) != 0 for f in fs for g in gs)


def is_isomorphic(m: Module, n: Module) -> bool:
    _same_algebra(m.algebra, n.algebra)
    if m is n:
        return True
    if m.dims != n.dims:
        return False
    if m.dim == 0:
        return True
    if fingerprint(m) != fingerprint(n):
        return False
    if len(hom_basis(m, n)) != fingerprint(m)[3] or len(hom_basis(n, m)) != fingerprint(m)[3]:
        return False
    if find_isomorphism(m, n) is not None:
        return True
    if is_indecomposable(m) and is_indecomposable(n):
        return _indecomposables_isomorphic(m, n)
    try:
        parts_m = decompose(m)
        parts_n = decompose(n)
    except SplitNotFound as exc:
        raise Inconclusive(f"isomorphism search exhausted its grid (radius {GRID_RADIUS})") from exc
    if len(parts_m) != len(parts_n):
        return False
    unmatched = list(parts_n)
    for x in parts_m:
        for k, y in enumerate(unmatched):
            if x.dims == y.dims and _indecomposables_isomorphic(x, y):
                unmatched.pop(k)
                break
        else:
            return False
    return True


def _power(f: Morphism, k: int) -> Morphism:
    result = identity(f.source)
    base = f
    while k:
        if k & 1:
            result = result.then(base)
        base = base.then(base)
        k >>= 1
    return result


def fitting_split(m: Module, f: Morphism):
    """(ker f^N, im f^N) inclusions for N = dim m; a proper split if both are nonzero."""
    g = _power(f, m.dim)
    return kernel(g), image(g)


def decompose(m: Module) -> list[Module]:
    """Indecomposable summands (each certified by dim End/rad End = 1)."""
    if m.dim == 0:
        return []
    if is_indecomposable(m):
        return [m]
    ends = hom_basis(m, m)
    ident = identity(m)
    cands = list(ends)
    cands += [linear_combination(m, m, (1, 1), (a, b)) for i, a in enumerate(ends) for b in ends[i + 1 :]]
    for f in cands:
        for lam in (0, 1, -1, 2, -2):
            g = f if lam == 0 else linear_combination(m, m, (1, q(-lam)), (f, ident))
            k, im = fitting_split(m, g)
            if 0 < k.source.dim < m.dim:
                return decompose(k.source) + decompose(im.source)
    raise SplitNotFound(f"no splitting endomorphism found for module with dims {m.dims}")
