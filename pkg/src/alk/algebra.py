"""Finite-dimensional algebras given by structure constants, and bound quiver
presentations that produce them.

Paths are written first-traversed arrow first: for ``a: i -> j`` and
``b: j -> k`` the product ``a*b`` is the nonzero path ``[a, b]``.  With this
convention right modules are quiver representations read along the arrows.

Every :class:`Algebra` carries a complete set of primitive orthogonal
idempotents ``e_0 .. e_{n-1}`` and a basis adapted to them: each basis element
lies in exactly one Peirce block ``e_s A e_t``.  Modules and morphisms rely on
this to store one small matrix per block instead of dense actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .linalg import Matrix, Rational, SpanCoordinates, left_kernel_basis, q, row_basis, solve, span_rank

DEFAULT_LENGTH_CAP = 64


class AlgebraError(ValueError):
    """Base class for invalid algebra input or failed internal checks."""


class NotAdmissible(AlgebraError):
    pass


class PresentationTooHard(AlgebraError):
    pass


class InvariantViolation(AlgebraError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex labels")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow names")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise AlgebraError(f"arrow {a.name!r} has an undeclared endpoint")

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise AlgebraError(f"unknown arrow {name!r}")

    def vertex_index(self, label: str) -> int:
        return self.vertices.index(label)

    def arrow_counts(self) -> dict[tuple[str, str], int]:
        out: dict[tuple[str, str], int] = {}
        for a in self.arrows:
            out[(a.source, a.target)] = out.get((a.source, a.target), 0) + 1
        return out


RelationTerm = tuple  # (coefficient, tuple of arrow names)


@dataclass(frozen=True)
class AlgebraPresentation:
    """Quiver with relations; each relation is a list of (coefficient, path) terms."""

    quiver: Quiver
    relations: tuple[tuple[RelationTerm, ...], ...] = ()

    def __post_init__(self):
        rels = []
        for rel in self.relations:
            terms = []
            for coeff, path in rel:
                c = q(coeff)
                path = tuple(path)
                if c == 0:
                    raise AlgebraError("relation coefficients must be nonzero")
                if len(path) < 2:
                    raise AlgebraError(f"relation path {list(path)} has length < 2")
                terms.append((c, path))
            if not terms:
                raise AlgebraError("empty relation")
            rels.append(tuple(terms))
        object.__setattr__(self, "relations", tuple(rels))
        for rel in self.relations:
            ends = {self.path_endpoints(p) for _, p in rel}
            if len(ends) != 1:
                raise AlgebraError("relation paths are not parallel")

    def path_endpoints(self, path: Sequence[str]) -> tuple[str, str]:
        arrows = [self.quiver.arrow(n) for n in path]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise AlgebraError(f"path {list(path)} is not composable at {a.name!r}")
        return arrows[0].source, arrows[-1].target


# ---------------------------------------------------------------------------
# rewriting against relation leading terms


def _path_key(path: tuple[str, ...]):
    return (len(path), path)


class _Rewriter:
    def __init__(self, pres: AlgebraPresentation):
        self.rules: dict[tuple[str, ...], list[tuple[Rational, tuple[str, ...]]]] = {}
        for rel in pres.relations:
            merged: dict[tuple[str, ...], Rational] = {}
            for c, p in rel:
                merged[p] = merged.get(p, 0) + c
            merged = {p: c for p, c in merged.items() if c != 0}
            if not merged:
                continue
            lead = max(merged, key=_path_key)
            lc = merged.pop(lead)
            tail = [(q(Fraction(-c) / lc), p) for p, c in merged.items()]
            if lead in self.rules and self.rules[lead] != tail:
                raise PresentationTooHard(f"two relations share the leading path {list(lead)}")
            self.rules[lead] = tail
        self.max_lead = max((len(p) for p in self.rules), default=0)

    def find(self, path: tuple[str, ...]):
        n = len(path)
        for length in range(2, min(n, self.max_lead) + 1):
            for start in range(n - length + 1):
                sub = path[start : start + length]
                if sub in self.rules:
                    return start, sub
        return None

    def is_reduced(self, path: tuple[str, ...]) -> bool:
        return self.find(path) is None

    def suffix_reducible(self, path: tuple[str, ...]) -> bool:
        n = len(path)
        return any(path[n - k :] in self.rules for k in range(2, min(n, self.max_lead) + 1))

    def normal_form(self, path: tuple[str, ...]) -> dict[tuple[str, ...], Rational]:
        todo = {path: 1}
        done: dict[tuple[str, ...], Rational] = {}
        steps = 0
        while todo:
            p = max(todo, key=_path_key)
            c = todo.pop(p)
            if c == 0:
                continue
            hit = self.find(p)
            if hit is None:
                done[p] = done.get(p, 0) + c
                continue
            steps += 1
            if steps > 100000:
                raise PresentationTooHard("rewriting does not terminate")
            start, sub = hit
            for tc, tp in self.rules[sub]:
                np_ = p[:start] + tp + p[start + len(sub) :]
                todo[np_] = todo.get(np_, 0) + c * tc
        return {p: q(c) for p, c in done.items() if c != 0}


@dataclass(frozen=True)
class PathBasisElement:
    vertex: str | None  # set for trivial paths
    arrows: tuple[str, ...]

    @property
    def label(self) -> str:
        return f"e{self.vertex}" if not self.arrows else "*".join(self.arrows)


def path_basis(pres: AlgebraPresentation, length_cap: int = DEFAULT_LENGTH_CAP) -> list[PathBasisElement]:
    """Reduced paths of the presentation, trivial paths first, then by length.

    Raises NotAdmissible if a reduced path longer than ``length_cap`` exists.
    """
    rw = _Rewriter(pres)
    quiver = pres.quiver
    out = [PathBasisElement(v, ()) for v in quiver.vertices]
    level = [(a.name,) for a in quiver.arrows]
    length = 1
    while level:
        level = [p for p in level if not rw.suffix_reducible(p)]
        if level and length > length_cap:
            raise NotAdmissible(
                f"reduced paths survive beyond length {length_cap}; the arrow ideal is not nilpotent modulo relations"
            )
        out.extend(PathBasisElement(None, p) for p in level)
        nxt = []
        for p in level:
            end = quiver.arrow(p[-1]).target
            for a in quiver.arrows:
                if a.source == end:
                    nxt.append(p + (a.name,))
        level = nxt
        length += 1
    return out


# ---------------------------------------------------------------------------


class Algebra:
    """Structure-constant algebra with a Peirce-adapted basis.

    ``table[i][j]`` maps basis indices k to c[i][j][k] where
    b_i * b_j = sum_k c[i][j][k] b_k.  ``idempotents`` are coordinate vectors.
    """

    def __init__(
        self,
        basis_labels: Sequence[str],
        table: Sequence[Sequence[dict[int, Rational]]],
        idempotents: Sequence[Sequence],
        vertex_labels: Sequence[str] | None = None,
        verify: bool = True,
        name: str = "",
    ):
        self.dim = len(basis_labels)
        self.basis_labels = tuple(basis_labels)
        self.table = tuple(tuple({k: q(v) for k, v in cell.items() if v != 0} for cell in row) for row in table)
        self.idempotents = tuple(tuple(q(x) for x in e) for e in idempotents)
        self.n = len(self.idempotents)
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else tuple(str(i + 1) for i in range(self.n))
        self.name = name
        self.paths: tuple[PathBasisElement, ...] | None = None
        self.presentation: AlgebraPresentation | None = None
        self._opposite: Algebra | None = None
        self.blocks = self._peirce_blocks()
        if verify:
            self.verify()

    # -- basic arithmetic --------------------------------------------------

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        out = [0] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] += ab * c
        return tuple(q(v) for v in out)

    def basis_vector(self, k: int) -> tuple:
        return tuple(1 if i == k else 0 for i in range(self.dim))

    @cached_property
    def unit(self) -> tuple:
        u = [0] * self.dim
        for e in self.idempotents:
            for k, x in enumerate(e):
                u[k] += x
        return tuple(q(x) for x in u)

    @property
    def structure_constants(self) -> list[list[list[Rational]]]:
        return [[[cell.get(k, 0) for k in range(self.dim)] for cell in row] for row in self.table]

    def _peirce_blocks(self) -> tuple[tuple[int, int], ...]:
        blocks = []
        for k in range(self.dim):
            b = self.basis_vector(k)
            left = [i for i, e in enumerate(self.idempotents) if self.mul(e, b) == b]
            right = [j for j, e in enumerate(self.idempotents) if self.mul(b, e) == b]
            if len(left) != 1 or len(right) != 1:
                raise InvariantViolation(f"basis element {self.basis_labels[k]} is not in a single Peirce block")
            blocks.append((left[0], right[0]))
        return tuple(blocks)

    def in_block(self, s: int, t: int) -> list[int]:
        return [k for k, b in enumerate(self.blocks) if b == (s, t)]

    def left_vertex(self, k: int) -> int:
        return self.blocks[k][0]

    def right_vertex(self, k: int) -> int:
        return self.blocks[k][1]

    # -- invariants -------------------------------------------------------

    def verify(self) -> None:
        dim = self.dim
        by_left: dict[int, list[int]] = {}
        for k, (s, _) in enumerate(self.blocks):
            by_left.setdefault(s, []).append(k)
        for i in range(dim):
            for j in by_left.get(self.blocks[i][1], []):
                ij = self.table[i][j]
                for k in by_left.get(self.blocks[j][1], []):
                    lhs: dict[int, Rational] = {}
                    for m, c in ij.items():
                        for r, d in self.table[m][k].items():
                            lhs[r] = lhs.get(r, 0) + c * d
                    rhs: dict[int, Rational] = {}
                    for m, c in self.table[j][k].items():
                        for r, d in self.table[i][m].items():
                            rhs[r] = rhs.get(r, 0) + c * d
                    lhs = {r: v for r, v in lhs.items() if v != 0}
                    rhs = {r: v for r, v in rhs.items() if v != 0}
                    if lhs != rhs:
                        raise PresentationTooHard(
                            f"multiplication is not associative on ({self.basis_labels[i]}, "
                            f"{self.basis_labels[j]}, {self.basis_labels[k]})"
                        )
        u = self.unit
        for k in range(dim):
            b = self.basis_vector(k)
            if self.mul(u, b) != b or self.mul(b, u) != b:
                raise InvariantViolation("unit is not a two-sided identity")
        for i, e in enumerate(self.idempotents):
            for j, f in enumerate(self.idempotents):
                want = e if i == j else (0,) * dim
                if self.mul(e, f) != tuple(want):
                    raise InvariantViolation("idempotents are not orthogonal")
        rad = self.radical_block_dims
        for i in range(self.n):
            if len(self.in_block(i, i)) - rad[(i, i)] != 1:
                raise InvariantViolation(f"idempotent {self.vertex_labels[i]} is not primitive")

    # -- radical ---------------------------------------------------------------

    @cached_property
    def radical_basis(self) -> list[tuple]:
        """Jacobson radical as the radical of the trace form tr(L_{xy}); char 0."""
        dim = self.dim
        traces = [sum(self.table[k][j].get(j, 0) for j in range(dim)) for k in range(dim)]
        gram = [[sum(c * traces[k] for k, c in self.table[i][j].items()) for j in range(dim)] for i in range(dim)]
        vecs = left_kernel_basis(Matrix(gram, dim)) if dim else []
        return row_basis(vecs, dim)[0] if vecs else []

    def _block_project(self, vectors: Sequence[Sequence], s: int, t: int) -> list[tuple]:
        idx = self.in_block(s, t)
        return [tuple(v[k] for k in idx) for v in vectors]

    @cached_property
    def radical_block_dims(self) -> dict[tuple[int, int], int]:
        rad = self.radical_basis
        out = {}
        for s in range(self.n):
            for t in range(self.n):
                idx = self.in_block(s, t)
                out[(s, t)] = span_rank(self._block_project(rad, s, t), len(idx)) if idx else 0
        return out

    @cached_property
    def radical_squared_basis(self) -> list[tuple]:
        rad = self.radical_basis
        prods = [self.mul(x, y) for x in rad for y in rad]
        return row_basis(prods, self.dim)[0] if prods else []

    @cached_property
    def generators(self) -> tuple[tuple[int, int, tuple], ...]:
        """Radical generators (source vertex, target vertex, coordinate vector).

        Together with the idempotents they generate the algebra: one
        representative per dimension of e_s (rad / rad^2) e_t.
        """
        out = []
        rad, rad2 = self.radical_basis, self.radical_squared_basis
        for s in range(self.n):
            for t in range(self.n):
                idx = self.in_block(s, t)
                if not idx:
                    continue
                rb = row_basis(self._block_project(rad, s, t), len(idx))[0]
                current = list(row_basis(self._block_project(rad2, s, t), len(idx))[0])
                r = len(current)
                for v in rb:
                    if span_rank(current + [v], len(idx)) > r:
                        current.append(v)
                        r += 1
                        full = [0] * self.dim
                        for k, x in zip(idx, v):
                            full[k] = x
                        out.append((s, t, tuple(full)))
        return tuple(out)

    def simple_character(self, i: int) -> dict[int, Rational]:
        """Scalar by which each basis element of e_i A e_i acts on the simple S_i."""
        cache = self.__dict__.setdefault("_characters", {})
        if i in cache:
            return cache[i]
        idx = self.in_block(i, i)
        e = self._block_project([self.idempotents[i]], i, i)[0]
        rad = row_basis(self._block_project(self.radical_basis, i, i), len(idx))[0]
        a = Matrix([e] + list(rad), len(idx))
        b = Matrix([[1]] + [[0]] * len(rad), 1)
        phi = solve(a, b)
        if phi is None:
            raise InvariantViolation(f"no character on e{self.vertex_labels[i]} A e{self.vertex_labels[i]}")
        cache[i] = {k: phi[r, 0] for r, k in enumerate(idx) if phi[r, 0] != 0}
        return cache[i]

    # -- derived algebras -------------------------------------------------

    def opposite(self) -> "Algebra":
        if self._opposite is None:
            table = [[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)]
            op = Algebra(self.basis_labels, table, self.idempotents, self.vertex_labels, verify=False,
                         name=f"{self.name}^op" if self.name else "")
            op.paths = self.paths
            op._opposite = self
            self._opposite = op
        return self._opposite

    def ext_quiver(self) -> Quiver:
        """Gabriel quiver: dim e_s (rad/rad^2) e_t arrows s -> t."""
        rad, rad2 = self.radical_basis, self.radical_squared_basis
        arrows = []
        for s in range(self.n):
            for t in range(self.n):
                idx = self.in_block(s, t)
                if not idx:
                    continue
                count = span_rank(self._block_project(rad, s, t), len(idx)) - span_rank(
                    self._block_project(rad2, s, t), len(idx)
                )
                src, tgt = self.vertex_labels[s], self.vertex_labels[t]
                for c in range(count):
                    arrows.append(Arrow(f"{src}->{tgt}" + (f"#{c + 1}" if count > 1 else ""), src, tgt))
        return Quiver(self.vertex_labels, tuple(arrows))

    def coordinates_in(self, basis: Sequence[Sequence]) -> SpanCoordinates:
        return SpanCoordinates(basis, self.dim)

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Algebra{tag} dim={self.dim} vertices={self.n}>"


def algebra_from_presentation(
    pres: AlgebraPresentation, length_cap: int = DEFAULT_LENGTH_CAP, name: str = ""
) -> Algebra:
    basis = path_basis(pres, length_cap)
    rw = _Rewriter(pres)
    quiver = pres.quiver
    index = {}
    for k, b in enumerate(basis):
        index[("v", b.vertex) if b.vertex is not None else ("p", b.arrows)] = k

    def ends(b: PathBasisElement) -> tuple[str, str]:
        if b.vertex is not None:
            return b.vertex, b.vertex
        return quiver.arrow(b.arrows[0]).source, quiver.arrow(b.arrows[-1]).target

    endpoints = [ends(b) for b in basis]
    dim = len(basis)
    table: list[list[dict[int, Rational]]] = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if endpoints[i][1] != endpoints[j][0]:
                continue
            if a.vertex is not None:
                table[i][j] = {j: 1}
            elif b.vertex is not None:
                table[i][j] = {i: 1}
            else:
                nf = rw.normal_form(a.arrows + b.arrows)
                cell = {}
                for p, c in nf.items():
                    key = ("p", p)
                    if key not in index:
                        raise PresentationTooHard(f"normal form {list(p)} is not a basis path")
                    cell[index[key]] = c
                table[i][j] = cell
    idem = [tuple(1 if k == index[("v", v)] else 0 for k in range(dim)) for v in quiver.vertices]
    alg = Algebra([b.label for b in basis], table, idem, quiver.vertices, verify=True, name=name)
    alg.paths = tuple(basis)
    alg.presentation = pres
    return alg


def field_algebra() -> Algebra:
    return Algebra(["e1"], [[{0: 1}]], [(1,)], ["1"])
