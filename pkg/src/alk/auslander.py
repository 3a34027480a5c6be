"""Endomorphism algebras of additive generators and the functor Hom_R(M, -).

Conventions.  For summands M_1..M_n put Lambda = End(M_1 + ... + M_n) with
product ``f * g = f o g`` (apply g first).  A map f: M_j -> M_i lies in the
Peirce block e_i Lambda e_j, so e_i Lambda = Hom(M, M_i) and right modules
Hom(M, X) are acted on by precomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, InvariantViolation
from .ar import EnumerationClass, enumerate_indecomposables
from .iso import is_indecomposable, is_isomorphic
from .linalg import Matrix, SpanCoordinates
from .modules import Module, Morphism, _same_algebra, hom_basis, identity, zero_module


class CompositionError(InvariantViolation):
    pass


def _coords_table(maps: list[Morphism]) -> SpanCoordinates | None:
    if not maps:
        return None
    return SpanCoordinates([f.flat() for f in maps], len(maps[0].flat()))


@dataclass
class EndAlgebraBundle:
    lam: Algebra
    summands: list[Module]
    basis_book: list[tuple[int, int, int]]  # (source summand, target summand, index in hom_basis(src, tgt))
    base: Algebra
    homs: dict[tuple[int, int], list[Morphism]] = field(repr=False)
    offsets: dict[tuple[int, int], int] = field(repr=False)

    def hom_dims(self) -> list[list[int]]:
        n = len(self.summands)
        return [[len(self.homs[(i, j)]) for j in range(n)] for i in range(n)]

    def element(self, k: int) -> Morphism:
        s, t, idx = self.basis_book[k]
        return self.homs[(s, t)][idx]

    def summary(self) -> dict:
        quiver = self.lam.ext_quiver()
        return {
            "base": self.base.name,
            "dim": self.lam.dim,
            "summands": [{"name": m.name, "dims": list(m.dims)} for m in self.summands],
            "hom_dims": self.hom_dims(),
            "quiver": {
                "vertices": list(quiver.vertices),
                "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in quiver.arrows],
            },
        }


def end_algebra(summands: list[Module], name: str = "") -> EndAlgebraBundle:
    if not summands:
        raise ValueError("end_algebra needs at least one summand")
    base = summands[0].algebra
    for m in summands:
        _same_algebra(base, m.algebra)
        if not is_indecomposable(m):
            raise InvariantViolation(f"summand {m.name or m.dims} is not indecomposable")
    for i, m in enumerate(summands):
        for x in summands[i + 1 :]:
            if is_isomorphic(m, x):
                raise InvariantViolation(f"summands {m.name or m.dims} and {x.name or x.dims} are isomorphic")
    n = len(summands)
    homs = {(s, t): hom_basis(summands[s], summands[t]) for s in range(n) for t in range(n)}
    coords = {key: _coords_table(maps) for key, maps in homs.items()}

    # Peirce block (t, s) holds Hom(M_s, M_t); order blocks by (t, s)
    book, offsets = [], {}
    for t in range(n):
        for s in range(n):
            offsets[(s, t)] = len(book)
            book.extend((s, t, idx) for idx in range(len(homs[(s, t)])))
    dim = len(book)

    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for k, (sk, tk, ik) in enumerate(book):
        f = homs[(sk, tk)][ik]
        for l, (sl, tl, il) in enumerate(book):
            if tl != sk:
                continue
            g = homs[(sl, tl)][il]
            prod = g.then(f)  # f o g : M_sl -> M_tk
            if prod.is_zero():
                continue
            c = coords[(sl, tk)].coords(prod.flat())
            if c is None:
                raise CompositionError("composition re-expression failed")
            base_off = offsets[(sl, tk)]
            table[k][l] = {base_off + r: x for r, x in enumerate(c) if x}

    idem = []
    for i, m in enumerate(summands):
        c = coords[(i, i)].coords(identity(m).flat())
        if c is None:
            raise CompositionError("identity is outside the endomorphism basis")
        e = [0] * dim
        for r, x in enumerate(c):
            e[offsets[(i, i)] + r] = x
        idem.append(e)

    names = [m.name for m in summands]
    labels = names if all(names) and len(set(names)) == n else [str(i + 1) for i in range(n)]
    basis_labels = [f"{labels[t]}<-{labels[s]}#{idx}" for s, t, idx in book]
    lam = Algebra(basis_labels, table, idem, labels, verify=True, name=name or f"End({base.name})")
    if lam.dim != sum(len(v) for v in homs.values()):
        raise CompositionError("dimension of the endomorphism algebra disagrees with the hom count")
    return EndAlgebraBundle(lam, list(summands), book, base, homs, offsets)


def hom_functor_module(bundle: EndAlgebraBundle, x: Module) -> Module:
    """Hom_R(M, x) as a right module over the endomorphism algebra."""
    _same_algebra(bundle.base, x.algebra)
    lam = bundle.lam
    if x.dim == 0:
        return zero_module(lam)
    comps = [hom_basis(m, x) for m in bundle.summands]
    coords = [_coords_table(c) for c in comps]
    dims = [len(c) for c in comps]
    blocks = []
    for k, (s, t, idx) in enumerate(bundle.basis_book):
        f = bundle.homs[(s, t)][idx]
        # f: M_s -> M_t sits in block (t, s): Hom(M_t, x) -> Hom(M_s, x), phi -> phi o f
        rows = []
        for phi in comps[t]:
            pre = f.then(phi)
            if dims[s] == 0:
                rows.append(())
                continue
            c = coords[s].coords(pre.flat())
            if c is None:
                raise CompositionError("composition re-expression failed")
            rows.append(tuple(c))
        blocks.append(Matrix(rows, dims[s]) if rows else Matrix.zeros(0, dims[s]))
    name = f"Hom(M,{x.name})" if x.name else ""
    return Module(lam, dims, blocks, name=name, verify=True)


def auslander_algebra(r: Algebra, cls: EnumerationClass) -> EndAlgebraBundle:
    mods = enumerate_indecomposables(r, cls)
    return end_algebra(mods, name=f"Aus({r.name})" if r.name else "")


def bundle_dot(bundle: EndAlgebraBundle) -> str:
    from .report import dot_string

    return dot_string(bundle.lam.ext_quiver(), title=bundle.lam.name or "lambda")
