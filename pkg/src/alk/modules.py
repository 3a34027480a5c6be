"""Right modules over a Peirce-adapted :class:`~alk.algebra.Algebra`.

A module stores its vertex components ``M e_i`` (dimension vector ``dims``)
and, for each algebra basis element ``b`` in block ``e_s A e_t``, the matrix
of ``v -> v b`` from ``M e_s`` to ``M e_t`` (row vectors).  The full action
matrices are assembled on demand by :attr:`Module.action`.

Morphisms are block diagonal with respect to the vertex components and are
stored as one matrix per vertex.  ``f.then(g)`` is the composite "first f,
then g", whose matrices are products ``F @ G``.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import Algebra
from .linalg import Matrix, block_diag, hstack, left_kernel_basis, q, row_basis, sparse_kernel


class AlgebraMismatch(ValueError):
    pass


class ModuleError(ValueError):
    pass


def _zero(r: int, c: int) -> Matrix:
    return Matrix.zeros(r, c)


def _same_algebra(a: Algebra, b: Algebra) -> None:
    if a is not b:
        raise AlgebraMismatch("modules live over different algebras")


class Module:
    def __init__(self, algebra: Algebra, dims: Sequence[int], blocks: Sequence[Matrix], name: str = "",
                 verify: bool = False):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.blocks = tuple(blocks)
        self.name = name
        self.dim = sum(self.dims)
        self._cache: dict = {}
        if len(self.dims) != algebra.n or len(self.blocks) != algebra.dim:
            raise ModuleError("module shape does not match its algebra")
        for k, (s, t) in enumerate(algebra.blocks):
            if self.blocks[k].shape != (self.dims[s], self.dims[t]):
                raise ModuleError(f"block for basis element {algebra.basis_labels[k]} has the wrong shape")
        if verify:
            self.verify()

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Module{tag} dims={self.dims}>"

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return tuple(out)

    @property
    def action(self) -> list[Matrix]:
        """Full dim x dim action matrix for each algebra basis element."""
        off = self.offsets
        out = []
        for k, (s, t) in enumerate(self.algebra.blocks):
            full = [[0] * self.dim for _ in range(self.dim)]
            b = self.blocks[k]
            for i in range(b.rows):
                full[off[s] + i][off[t] : off[t] + b.cols] = b.data[i]
            out.append(Matrix(full, self.dim))
        return out

    def element_block(self, vec: Sequence, s: int, t: int) -> Matrix:
        """Action of an algebra element lying in e_s A e_t."""
        acc = [[0] * self.dims[t] for _ in range(self.dims[s])]
        for k in self.algebra.in_block(s, t):
            c = vec[k]
            if c:
                for i, row in enumerate(self.blocks[k].data):
                    for j, x in enumerate(row):
                        if x:
                            acc[i][j] += c * x
        return Matrix(acc, self.dims[t])

    @property
    def gen_blocks(self) -> list[tuple[int, int, Matrix]]:
        if "gens" not in self._cache:
            self._cache["gens"] = [(s, t, self.element_block(v, s, t)) for s, t, v in self.algebra.generators]
        return self._cache["gens"]

    def split(self, v: Sequence) -> list[tuple]:
        off = self.offsets
        return [tuple(v[off[i] : off[i] + d]) for i, d in enumerate(self.dims)]

    def verify(self) -> None:
        """Check unit, idempotent and multiplicativity invariants of the action."""
        alg = self.algebra
        for i, e in enumerate(alg.idempotents):
            for j in range(alg.n):
                blk = self.element_block(e, j, j)
                want = Matrix.identity(self.dims[j]) if i == j else _zero(self.dims[j], self.dims[j])
                if blk != want:
                    raise ModuleError("idempotents do not act as the vertex projections")
        by_left: dict[int, list[int]] = {}
        for k, (s, _) in enumerate(alg.blocks):
            by_left.setdefault(s, []).append(k)
        for i, (s, t) in enumerate(alg.blocks):
            for j in by_left.get(t, []):
                lhs = self.blocks[i] @ self.blocks[j]
                rhs = self.element_block(
                    [alg.table[i][j].get(k, 0) for k in range(alg.dim)], s, alg.blocks[j][1]
                )
                if lhs != rhs:
                    raise ModuleError(
                        f"action is not multiplicative on ({alg.basis_labels[i]}, {alg.basis_labels[j]})"
                    )


class Morphism:
    def __init__(self, source: Module, target: Module, blocks: Sequence[Matrix], verify: bool = False):
        _same_algebra(source.algebra, target.algebra)
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)
        self._cache: dict = {}
        for i, b in enumerate(self.blocks):
            if b.shape != (source.dims[i], target.dims[i]):
                raise ModuleError("morphism block has the wrong shape")
        if verify:
            self.verify()

    @property
    def matrix(self) -> Matrix:
        return block_diag(self.blocks)

    def verify(self) -> None:
        src, tgt = self.source, self.target
        for k, (s, t) in enumerate(src.algebra.blocks):
            if self.blocks[s] @ tgt.blocks[k] != src.blocks[k] @ self.blocks[t]:
                raise ModuleError("matrix does not intertwine the actions")

    def then(self, other: "Morphism") -> "Morphism":
        if other.source is not self.target and other.source.dims != self.target.dims:
            raise ModuleError("morphisms are not composable")
        return Morphism(self.source, other.target, [a @ b for a, b in zip(self.blocks, other.blocks)])

    def flat(self) -> tuple:
        return tuple(x for b in self.blocks for row in b.data for x in row)

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def __repr__(self) -> str:
        return f"<Morphism {self.source.dims} -> {self.target.dims}>"


def identity(m: Module) -> Morphism:
    return Morphism(m, m, [Matrix.identity(d) for d in m.dims])


def zero_module(algebra: Algebra) -> Module:
    return Module(algebra, [0] * algebra.n, [_zero(0, 0) for _ in range(algebra.dim)], name="0")


def linear_combination(source: Module, target: Module, coeffs: Sequence, maps: Sequence[Morphism]) -> Morphism:
    blocks = []
    for i in range(source.algebra.n):
        acc = [[0] * target.dims[i] for _ in range(source.dims[i])]
        for c, f in zip(coeffs, maps):
            if c:
                for r, row in enumerate(f.blocks[i].data):
                    for j, x in enumerate(row):
                        if x:
                            acc[r][j] += c * x
        blocks.append(Matrix(acc, target.dims[i]))
    return Morphism(source, target, blocks)


# ---------------------------------------------------------------------------
# subspaces given by one RREF basis per vertex


def _vertex_bases(vectors_per_vertex: Sequence[Sequence[tuple]], dims: Sequence[int]):
    bases, pivots = [], []
    for vecs, d in zip(vectors_per_vertex, dims):
        if vecs:
            b, p = row_basis(vecs, d)
        else:
            b, p = [], []
        bases.append(b)
        pivots.append(p)
    return bases, pivots


def restrict(m: Module, bases: Sequence[Sequence[tuple]], pivots: Sequence[Sequence[int]], name: str = ""):
    """Submodule spanned by per-vertex RREF bases (assumed closed) and its inclusion."""
    alg = m.algebra
    dims = [len(b) for b in bases]
    blocks = []
    for k, (s, t) in enumerate(alg.blocks):
        blk = m.blocks[k]
        rows = []
        for v in bases[s]:
            w = blk.vecmul(v)
            rows.append(tuple(w[p] for p in pivots[t]))
        blocks.append(Matrix._raw(tuple(rows), dims[t]))
    sub = Module(alg, dims, blocks, name=name)
    inc = Morphism(sub, m, [Matrix._raw(tuple(tuple(v) for v in b), d) for b, d in zip(bases, m.dims)])
    return sub, inc


def _reducer(basis: Sequence[tuple], pivots: Sequence[int], d: int):
    free = [c for c in range(d) if c not in set(pivots)]

    def reduce(v: Sequence) -> tuple:
        w = list(v)
        for b, p in zip(basis, pivots):
            a = w[p]
            if a:
                for j, x in enumerate(b):
                    if x:
                        w[j] -= a * x
        return tuple(q(w[c]) for c in free)

    return free, reduce


def quotient(m: Module, bases: Sequence[Sequence[tuple]], pivots: Sequence[Sequence[int]], name: str = ""):
    """Quotient by the submodule with the given per-vertex RREF bases, and the projection."""
    alg = m.algebra
    reducers = [_reducer(b, p, d) for b, p, d in zip(bases, pivots, m.dims)]
    dims = [len(f) for f, _ in reducers]
    blocks = []
    for k, (s, t) in enumerate(alg.blocks):
        blk = m.blocks[k]
        red = reducers[t][1]
        rows = tuple(red(blk.data[c]) for c in reducers[s][0])
        blocks.append(Matrix._raw(rows, dims[t]))
    quo = Module(alg, dims, blocks, name=name)
    proj = []
    for i, d in enumerate(m.dims):
        red = reducers[i][1]
        proj.append(Matrix._raw(tuple(red(tuple(1 if j == r else 0 for j in range(d))) for r in range(d)), dims[i]))
    return quo, Morphism(m, quo, proj)


def closure(m: Module, vectors_per_vertex: Sequence[Sequence[tuple]]):
    """Smallest submodule containing the given vertex-homogeneous vectors."""
    bases, pivots = _vertex_bases(vectors_per_vertex, m.dims)
    while True:
        grow = [list(b) for b in bases]
        for s, t, g in m.gen_blocks:
            for v in bases[s]:
                w = g.vecmul(v)
                if any(w):
                    grow[t].append(w)
        nb, npiv = _vertex_bases(grow, m.dims)
        if [len(b) for b in nb] == [len(b) for b in bases]:
            return bases, pivots
        bases, pivots = nb, npiv


def submodule_generated(m: Module, vectors: Sequence[Sequence], name: str = ""):
    per = [[] for _ in m.dims]
    for v in vectors:
        if len(v) != m.dim:
            raise ModuleError("vector outside the ambient space")
        for i, part in enumerate(m.split(v)):
            if any(part):
                per[i].append(part)
    return restrict(m, *closure(m, per), name=name)


# ---------------------------------------------------------------------------
# standard modules


def projective_sum(algebra: Algebra, vertices: Sequence[int], name: str = ""):
    """Direct sum of e_i A over ``vertices`` (with repetition).

    Returns the module and ``positions[r][k]`` = (vertex, local index) of the
    basis element b_k inside summand r.
    """
    n = algebra.n
    dims = [0] * n
    positions: list[dict[int, tuple[int, int]]] = []
    members: list[list[int]] = []
    for i in vertices:
        pos = {}
        ks = [k for k in range(algebra.dim) if algebra.blocks[k][0] == i]
        for k in ks:
            j = algebra.blocks[k][1]
            pos[k] = (j, dims[j])
            dims[j] += 1
        positions.append(pos)
        members.append(ks)
    blocks = []
    for b, (s, t) in enumerate(algebra.blocks):
        rows = [[0] * dims[t] for _ in range(dims[s])]
        for pos, ks in zip(positions, members):
            for k in ks:
                vk, lk = pos[k]
                if vk != s:
                    continue
                for l, c in algebra.table[k][b].items():
                    rows[lk][pos[l][1]] = c
        blocks.append(Matrix._raw(tuple(tuple(r) for r in rows), dims[t]))
    return Module(algebra, dims, blocks, name=name), positions


def regular_module(algebra: Algebra) -> Module:
    return projective_sum(algebra, range(algebra.n), name="A")[0]


def _label(algebra: Algebra, i: int) -> str:
    return algebra.vertex_labels[i]


def _check_vertex(algebra: Algebra, i: int) -> None:
    if not 0 <= i < algebra.n:
        raise IndexError(f"vertex index {i} out of range")


def indec_projective(algebra: Algebra, i: int) -> Module:
    _check_vertex(algebra, i)
    return projective_sum(algebra, [i], name=f"P{_label(algebra, i)}")[0]


def simple_module(algebra: Algebra, i: int) -> Module:
    _check_vertex(algebra, i)
    dims = [1 if j == i else 0 for j in range(algebra.n)]
    chi = algebra.simple_character(i)
    blocks = []
    for k, (s, t) in enumerate(algebra.blocks):
        if s == t == i:
            blocks.append(Matrix._raw(((chi.get(k, 0),),), 1))
        else:
            blocks.append(_zero(dims[s], dims[t]))
    return Module(algebra, dims, blocks, name=f"S{_label(algebra, i)}")


def indec_injective(algebra: Algebra, i: int) -> Module:
    _check_vertex(algebra, i)
    m = dual(indec_projective(algebra.opposite(), i))
    m.name = f"I{_label(algebra, i)}"
    return m


def direct_sum(mods: Sequence[Module], algebra: Algebra | None = None, name: str = "") -> Module:
    if not mods:
        if algebra is None:
            raise ModuleError("direct_sum of no modules needs an algebra")
        return zero_module(algebra)
    alg = mods[0].algebra
    for m in mods:
        _same_algebra(alg, m.algebra)
    dims = [sum(m.dims[i] for m in mods) for i in range(alg.n)]
    blocks = [block_diag([m.blocks[k] for m in mods]) for k in range(alg.dim)]
    return Module(alg, dims, blocks, name=name or " + ".join(m.name or "?" for m in mods))


def representation(algebra: Algebra, dims: Sequence[int], arrow_maps: dict[str, Matrix], name: str = "") -> Module:
    """Module over a path algebra from one matrix per arrow (rows: source space)."""
    if algebra.paths is None:
        raise ModuleError("representation() needs an algebra built from a presentation")
    blocks = []
    for k, p in enumerate(algebra.paths):
        s, t = algebra.blocks[k]
        if p.vertex is not None:
            blocks.append(Matrix.identity(dims[s]))
            continue
        acc = Matrix.identity(dims[s])
        for a in p.arrows:
            acc = acc @ arrow_maps[a]
        blocks.append(acc)
    return Module(algebra, dims, blocks, name=name, verify=True)


# ---------------------------------------------------------------------------
# duality


def dual(m: Module) -> Module:
    """k-dual D(M) as a right module over the opposite algebra."""
    op = m.algebra.opposite()
    return Module(op, m.dims, [b.T for b in m.blocks], name=f"D({m.name})" if m.name else "")


def dual_morphism(f: Morphism, source: Module | None = None, target: Module | None = None) -> Morphism:
    """D(f): D(target) -> D(source); pass the duals if they already exist."""
    src = source if source is not None else dual(f.target)
    tgt = target if target is not None else dual(f.source)
    return Morphism(src, tgt, [b.T for b in f.blocks])


# ---------------------------------------------------------------------------
# hom spaces


def hom_basis(m: Module, n: Module) -> list[Morphism]:
    """Basis of Hom_A(m, n), solving the intertwining equations for the generators."""
    _same_algebra(m.algebra, n.algebra)
    key = ("hom", id(n))
    hit = m._cache.get(key)
    if hit is not None and hit[0] is n:
        return hit[1]
    alg = m.algebra
    offs, ncols = [], 0
    for i in range(alg.n):
        offs.append(ncols)
        ncols += m.dims[i] * n.dims[i]
    rows: list[dict] = []
    for (s, t, gm), (_, _, gn) in zip(m.gen_blocks, n.gen_blocks):
        ms, mt, ns, nt = m.dims[s], m.dims[t], n.dims[s], n.dims[t]
        if not (ms and nt):
            continue
        for p in range(ms):
            gm_row = gm.data[p]
            for c in range(nt):
                eq: dict[int, object] = {}
                base = offs[s] + p * ns
                for r in range(ns):
                    x = gn.data[r][c]
                    if x:
                        eq[base + r] = eq.get(base + r, 0) + x
                for u in range(mt):
                    x = gm_row[u]
                    if x:
                        col = offs[t] + u * nt + c
                        eq[col] = eq.get(col, 0) - x
                eq = {j: v for j, v in eq.items() if v != 0}
                if eq:
                    rows.append(eq)
    out = []
    for v in sparse_kernel(rows, ncols):
        blocks = []
        for i in range(alg.n):
            mi, ni = m.dims[i], n.dims[i]
            o = offs[i]
            blocks.append(Matrix._raw(tuple(tuple(v[o + p * ni : o + (p + 1) * ni]) for p in range(mi)), ni))
        out.append(Morphism(m, n, blocks))
    m._cache[key] = (n, out)
    return out


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_basis(m, n))


# ---------------------------------------------------------------------------
# kernels, images, socle, radical, top


def kernel(f: Morphism, name: str = ""):
    """Inclusion of ker f into the source."""
    if "kernel" in f._cache:
        return f._cache["kernel"]
    src = f.source
    per = []
    for i, b in enumerate(f.blocks):
        if src.dims[i] == 0:
            per.append([])
        elif b.cols == 0:
            per.append([tuple(1 if j == r else 0 for j in range(src.dims[i])) for r in range(src.dims[i])])
        else:
            per.append(left_kernel_basis(b))
    out = restrict(src, *_vertex_bases(per, src.dims), name=name)[1]
    f._cache["kernel"] = out
    return out


def image(f: Morphism, name: str = ""):
    """Inclusion of im f into the target."""
    per = [[r for r in b.data if any(r)] for b in f.blocks]
    return restrict(f.target, *_vertex_bases(per, f.target.dims), name=name)[1]


def cokernel(f: Morphism, name: str = ""):
    """Projection of the target onto coker f."""
    per = [[r for r in b.data if any(r)] for b in f.blocks]
    return quotient(f.target, *_vertex_bases(per, f.target.dims), name=name)[1]


def _socle_bases(m: Module):
    per = []
    for i in range(m.algebra.n):
        d = m.dims[i]
        if d == 0:
            per.append([])
            continue
        outs = [g for s, _, g in m.gen_blocks if s == i and g.cols]
        if not outs:
            per.append([tuple(1 if j == r else 0 for j in range(d)) for r in range(d)])
        else:
            per.append(left_kernel_basis(hstack(outs, d)))
    return _vertex_bases(per, m.dims)


def socle(m: Module) -> Morphism:
    """Inclusion of soc m = {v : v rad(A) = 0}."""
    if "socle" not in m._cache:
        m._cache["socle"] = restrict(m, *_socle_bases(m), name=f"soc({m.name})" if m.name else "")[1]
    return m._cache["socle"]


def _radical_bases(m: Module):
    per = [[] for _ in m.dims]
    for _, t, g in m.gen_blocks:
        per[t].extend(r for r in g.data if any(r))
    return _vertex_bases(per, m.dims)


def radical_submodule(m: Module) -> Morphism:
    """Inclusion of rad m = m rad(A)."""
    if "rad" not in m._cache:
        m._cache["rad"] = restrict(m, *_radical_bases(m), name=f"rad({m.name})" if m.name else "")[1]
    return m._cache["rad"]


def top(m: Module) -> Morphism:
    """Projection m -> m / rad m."""
    if "top" not in m._cache:
        m._cache["top"] = quotient(m, *_radical_bases(m), name=f"top({m.name})" if m.name else "")[1]
    return m._cache["top"]


def radical_power(m: Module, k: int) -> Morphism:
    """Inclusion of m rad(A)^k."""
    bases, pivots = _vertex_bases(
        [[tuple(1 if j == r else 0 for j in range(d)) for r in range(d)] for d in m.dims], m.dims
    )
    for _ in range(k):
        per = [[] for _ in m.dims]
        for s, t, g in m.gen_blocks:
            for v in bases[s]:
                w = g.vecmul(v)
                if any(w):
                    per[t].append(w)
        bases, pivots = _vertex_bases(per, m.dims)
    return restrict(m, bases, pivots)[1]


def top_dims(m: Module) -> tuple[int, ...]:
    return top(m).target.dims


def socle_dims(m: Module) -> tuple[int, ...]:
    return socle(m).source.dims
