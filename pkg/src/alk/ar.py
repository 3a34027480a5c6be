"""Duality, transpose, Auslander-Reiten translates, and complete lists of
indecomposables for the representation-finite classes we support."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, AlgebraError
from .homology import projective_cover, top_lifts
from .iso import is_indecomposable, is_isomorphic
from .linalg import Matrix
from .modules import (
    Module,
    Morphism,
    cokernel,
    dual,
    dual_morphism,
    kernel,
    indec_projective,
    projective_sum,
    radical_power,
    representation,
    zero_module,
)

__all__ = [
    "dual",
    "dual_morphism",
    "transpose",
    "tau",
    "tau_inv",
    "EnumerationClass",
    "UnsupportedClass",
    "CompletenessCheckFailed",
    "enumerate_indecomposables",
    "in_list",
]


class UnsupportedClass(AlgebraError):
    pass


class CompletenessCheckFailed(AlgebraError):
    pass


def _presentation_map(m: Module):
    """Minimal presentation P1 -> P0 -> m -> 0 as algebra-element data.

    Returns (vertices of P0, vertices of P1, a) where a[s][r] is the
    coordinate vector of the image of the s-th generator of P1 in the r-th
    summand e_{i_r} A of P0.
    """
    alg = m.algebra
    cover = projective_cover(m)
    p0_verts = [i for i, _ in top_lifts(m)]
    _, positions0 = projective_sum(alg, p0_verts)
    inc = kernel(cover)
    k = inc.source
    lifts = top_lifts(k)
    p1_verts = [j for j, _ in lifts]
    a = []
    for j, v in lifts:
        w = inc.blocks[j].vecmul(v)  # vector in P0 e_j
        row = []
        for pos in positions0:
            coeffs = [0] * alg.dim
            for kk, (vj, loc) in pos.items():
                if vj == j:
                    coeffs[kk] = w[loc]
            row.append(tuple(coeffs))
        a.append(row)
    return p0_verts, p1_verts, a


def transpose(m: Module) -> Module:
    """Tr m over the opposite algebra: cokernel of Hom(P0, A) -> Hom(P1, A)."""
    alg = m.algebra
    op = alg.opposite()
    if m.dim == 0:
        return zero_module(op)
    p0_verts, p1_verts, a = _presentation_map(m)
    q0, pos0 = projective_sum(op, p0_verts)
    q1, pos1 = projective_sum(op, p1_verts)
    rows = [[None] * q0.dims[v] for v in range(alg.n)]
    for r, pos in enumerate(pos0):
        for k, (v, loc) in pos.items():
            out = [0] * q1.dims[v]
            for s, ps in enumerate(pos1):
                coeffs = a[s][r]
                for l, c in enumerate(coeffs):
                    if not c:
                        continue
                    for mm, d in alg.table[k][l].items():
                        vv, ll = ps[mm]
                        out[ll] += c * d
            rows[v][loc] = tuple(out)
    f = Morphism(q0, q1, [Matrix(rows[v], q1.dims[v]) for v in range(alg.n)])
    tr = cokernel(f).target
    tr.name = f"Tr({m.name})" if m.name else ""
    return tr


def tau(m: Module) -> Module:
    out = dual(transpose(m))
    out.name = f"tau({m.name})" if m.name else ""
    return out


def tau_inv(m: Module) -> Module:
    out = transpose(dual(m))
    out.name = f"tau^-({m.name})" if m.name else ""
    return out


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class EnumerationClass:
    """tag: "linear-An", "any-orientation-An" or "nakayama-linear"."""

    tag: str
    exponent: int | None = None

    TAGS = ("linear-An", "any-orientation-An", "nakayama-linear")

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise UnsupportedClass(f"unsupported class {self.tag!r}")


def _path_order(alg: Algebra) -> list[int] | None:
    """Vertex indices along the underlying line of an A_n quiver, or None."""
    quiver = alg.presentation.quiver
    n = len(quiver.vertices)
    if len(quiver.arrows) != n - 1:
        return None
    nbrs: dict[str, list[str]] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        if a.source == a.target:
            return None
        nbrs[a.source].append(a.target)
        nbrs[a.target].append(a.source)
    if any(len(set(x)) != len(x) for x in nbrs.values()):
        return None
    if n == 1:
        return [0]
    ends = [v for v in quiver.vertices if len(nbrs[v]) == 1]
    if len(ends) != 2 or any(len(x) > 2 for x in nbrs.values()):
        return None
    order, prev, cur = [], None, ends[0]
    while cur is not None:
        order.append(cur)
        nxt = [w for w in nbrs[cur] if w != prev]
        prev, cur = cur, (nxt[0] if nxt else None)
    if len(order) != n:
        return None
    return [quiver.vertex_index(v) for v in order]


def _interval_modules(alg: Algebra, order: list[int]) -> list[Module]:
    quiver = alg.presentation.quiver
    out = []
    n = len(order)
    for lo in range(n):
        for hi in range(lo, n):
            inside = {order[p] for p in range(lo, hi + 1)}
            dims = [1 if i in inside else 0 for i in range(alg.n)]
            maps = {}
            for a in quiver.arrows:
                s, t = quiver.vertex_index(a.source), quiver.vertex_index(a.target)
                if s in inside and t in inside:
                    maps[a.name] = Matrix([[1]])
                else:
                    maps[a.name] = Matrix.zeros(dims[s], dims[t])
            labels = [alg.vertex_labels[order[p]] for p in (lo, hi)]
            name = f"M[{labels[0]}]" if lo == hi else f"M[{labels[0]}..{labels[1]}]"
            out.append(representation(alg, dims, maps, name=name))
    return out


def _is_linear(alg: Algebra, order: list[int]) -> bool:
    quiver = alg.presentation.quiver
    forward = {(order[p], order[p + 1]) for p in range(len(order) - 1)}
    backward = {(t, s) for s, t in forward}
    arrows = {(quiver.vertex_index(a.source), quiver.vertex_index(a.target)) for a in quiver.arrows}
    return arrows == forward or arrows == backward


def _loewy_length(m: Module) -> int:
    k = 0
    while True:
        if radical_power(m, k).source.dim == 0:
            return k
        k += 1


def _uniserials(alg: Algebra) -> tuple[list[Module], int]:
    out = []
    expected = 0
    for i in range(alg.n):
        p = indec_projective(alg, i)
        ll = _loewy_length(p)
        expected += ll
        for k in range(1, ll + 1):
            v = alg.vertex_labels[i]
            quo = cokernel(radical_power(p, k)).target
            quo.name = f"S{v}" if k == 1 else (f"P{v}" if k == ll else f"P{v}/rad^{k}")
            out.append(quo)
    return out, expected


def _validate_nakayama(alg: Algebra, exponent: int | None) -> None:
    quiver = alg.presentation.quiver
    if len(quiver.vertices) == 1 and len(quiver.arrows) == 1 and quiver.arrows[0].source == quiver.arrows[0].target:
        shape_ok = True
    else:
        order = _path_order(alg)
        shape_ok = order is not None and _is_linear(alg, order)
    if not shape_ok:
        raise UnsupportedClass("nakayama-linear needs a linearly oriented A_n quiver or a single loop")
    if exponent is not None:
        from .homology import regular

        if _loewy_length(regular(alg)) != exponent:
            raise UnsupportedClass(f"algebra does not have Loewy length {exponent}")
        loop = len(quiver.vertices) == 1
        n = len(quiver.vertices)
        lengths = [len(p.arrows) for p in alg.paths]
        for ell in range(exponent + 1):
            want = 0 if ell >= exponent else (1 if loop else max(n - ell, 0))
            if lengths.count(ell) != want:
                raise UnsupportedClass("relations are not the truncation at the given exponent")


def enumerate_indecomposables(alg: Algebra, cls: EnumerationClass) -> list[Module]:
    """Complete list of indecomposables up to isomorphism, sorted by dimension vector."""
    if alg.presentation is None:
        raise UnsupportedClass("enumeration needs an algebra built from a presentation")
    if cls.tag in ("linear-An", "any-orientation-An"):
        if alg.presentation.relations:
            raise UnsupportedClass(f"{cls.tag} needs a quiver without relations")
        order = _path_order(alg)
        if order is None:
            raise UnsupportedClass(f"{cls.tag} needs an A_n quiver")
        if cls.tag == "linear-An" and not _is_linear(alg, order):
            raise UnsupportedClass("linear-An needs a linearly oriented quiver")
        mods = _interval_modules(alg, order)
        n = alg.n
        expected = n * (n + 1) // 2
    else:
        _validate_nakayama(alg, cls.exponent)
        mods, expected = _uniserials(alg)
    if len(mods) != expected:
        raise CompletenessCheckFailed(f"found {len(mods)} indecomposables, expected {expected}")
    seen = {}
    for m in mods:
        if m.dims in seen:
            raise CompletenessCheckFailed(f"two enumerated modules share dimension vector {m.dims}")
        seen[m.dims] = m
    for m in mods:
        if not is_indecomposable(m):
            raise CompletenessCheckFailed(f"{m.name} failed the indecomposability certificate")
    return [seen[d] for d in sorted(seen)]


def in_list(m: Module, mods: list[Module]) -> bool:
    return any(is_isomorphic(m, x) for x in mods)
