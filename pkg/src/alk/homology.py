"""Projective covers, injective envelopes, minimal (co)resolutions and the
homological dimensions read off them."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .algebra import Algebra, InvariantViolation
from .linalg import Matrix, SpanCoordinates, hstack, rank, span_rank
from .modules import (
    Module,
    Morphism,
    _radical_bases,
    dual,
    dual_morphism,
    hom_basis,
    kernel,
    projective_sum,
    radical_submodule,
    regular_module,
    simple_module,
    socle,
)

DEFAULT_CAP = 12


def default_cap() -> int:
    env = os.environ.get("ALK_CAP")
    return int(env) if env else DEFAULT_CAP


class DimensionReading:
    """A homological dimension, or the infinity surrogate once the cap is hit.

    Compare directly against integers: ``reading <= 1`` is False for an
    at-cap reading, ``reading >= 2`` is True for one.
    """

    __slots__ = ("value", "at_cap", "cap")

    def __init__(self, value: int, at_cap: bool = False, cap: int = DEFAULT_CAP):
        if cap < 1:
            raise ValueError("cap must be at least 1")
        self.value = cap if at_cap else value
        self.at_cap = at_cap
        self.cap = cap

    @classmethod
    def infinite(cls, cap: int) -> "DimensionReading":
        return cls(cap, at_cap=True, cap=cap)

    @property
    def finite(self) -> bool:
        return not self.at_cap

    def __le__(self, n: int) -> bool:
        return not self.at_cap and self.value <= n

    def __lt__(self, n: int) -> bool:
        return not self.at_cap and self.value < n

    def __ge__(self, n: int) -> bool:
        return self.at_cap or self.value >= n

    def __gt__(self, n: int) -> bool:
        return self.at_cap or self.value > n

    def __eq__(self, other) -> bool:
        if isinstance(other, DimensionReading):
            return (self.at_cap, self.value if not self.at_cap else None) == (
                other.at_cap,
                other.value if not other.at_cap else None,
            )
        if isinstance(other, int):
            return not self.at_cap and self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("inf",) if self.at_cap else self.value)

    def __repr__(self) -> str:
        return f"DimensionReading({self})"

    def __str__(self) -> str:
        return f"inf(>{self.cap})" if self.at_cap else str(self.value)

    def to_json(self):
        return {"at_cap": True, "cap": self.cap} if self.at_cap else self.value


def max_reading(readings, cap: int) -> DimensionReading:
    readings = list(readings)
    if any(r.at_cap for r in readings):
        return DimensionReading.infinite(cap)
    return DimensionReading(max((r.value for r in readings), default=-1), cap=cap)


# ---------------------------------------------------------------------------
# covers and envelopes


def top_lifts(m: Module) -> list[tuple[int, tuple]]:
    """Vectors (vertex, vector in m e_vertex) lifting a basis of top(m)."""
    bases, pivots = _radical_bases(m)
    out = []
    for i, d in enumerate(m.dims):
        taken = set(pivots[i])
        for c in range(d):
            if c not in taken:
                out.append((i, tuple(1 if j == c else 0 for j in range(d))))
    return out


def _cover_from_lifts(m: Module, lifts: list[tuple[int, tuple]]) -> Morphism:
    alg = m.algebra
    p, positions = projective_sum(alg, [i for i, _ in lifts], name="")
    blocks = [[None] * p.dims[j] for j in range(alg.n)]
    for (i, v), pos in zip(lifts, positions):
        for k, (j, loc) in pos.items():
            blocks[j][loc] = m.blocks[k].vecmul(v)
    mats = [Matrix._raw(tuple(rows), m.dims[j]) for j, rows in enumerate(blocks)]
    return Morphism(p, m, mats)


def projective_cover(m: Module) -> Morphism:
    """Minimal projective cover P -> m; minimality is checked, not assumed."""
    if "cover" in m._cache:
        return m._cache["cover"]
    lifts = top_lifts(m)
    pi = _cover_from_lifts(m, lifts)
    p = pi.source
    for j, b in enumerate(pi.blocks):
        if _block_rank(b) != m.dims[j]:
            raise InvariantViolation("projective cover is not surjective")
    ker = kernel(pi)
    radp = radical_submodule(p)
    for j in range(m.algebra.n):
        kb = ker.blocks[j]
        if kb.rows == 0:
            continue
        rb = radp.blocks[j]
        if span_rank(list(rb.data) + list(kb.data), p.dims[j]) != rb.rows:
            raise InvariantViolation("projective cover is not minimal: kernel not inside rad P")
    m._cache["cover"] = pi
    return pi


def injective_envelope(m: Module) -> Morphism:
    """Minimal injective envelope m -> I, as the dual of the cover of D(m)."""
    if "envelope" in m._cache:
        return m._cache["envelope"]
    dm = dual(m)
    pi = projective_cover(dm)
    inj = dual(pi.source)
    env = dual_morphism(pi, source=m, target=inj)
    if socle(m).source.dim != socle(inj).source.dim:
        raise InvariantViolation("injective envelope does not preserve the socle")
    m._cache["envelope"] = env
    return env


def is_projective(m: Module) -> bool:
    return projective_cover(m).source.dim == m.dim


def is_injective(m: Module) -> bool:
    return injective_envelope(m).target.dim == m.dim


# ---------------------------------------------------------------------------
# resolutions


@dataclass
class Resolution:
    """Minimal projective resolution (kind="projective") or injective coresolution.

    projective: terms[k] = P_k, differentials[k-1]: P_k -> P_{k-1},
    augmentation: P_0 -> module.  injective: terms[k] = I_k,
    differentials[k-1]: I_{k-1} -> I_k, augmentation: module -> I_0.
    """

    kind: str
    module: Module
    terms: list[Module]
    differentials: list[Morphism]
    augmentation: Morphism | None
    length: DimensionReading
    syzygies: list[Module] = field(default_factory=list)

    def verify(self) -> None:
        """d o d = 0 and exactness at every position, by per-vertex ranks."""
        if self.augmentation is None:
            return
        maps = [self.augmentation] + self.differentials
        if self.kind == "projective":
            chain = list(reversed(maps))  # P_n -> ... -> P_0 -> M
        else:
            chain = maps  # M -> I_0 -> ... -> I_n
        for f, g in zip(chain, chain[1:]):
            if not f.then(g).is_zero():
                raise InvariantViolation("consecutive differentials do not compose to zero")
        n = self.module.algebra.n
        for idx in range(len(chain) + 1):
            f = chain[idx - 1] if idx > 0 else None
            g = chain[idx] if idx < len(chain) else None
            obj = g.source if g is not None else f.target
            for j in range(n):
                rf = _block_rank(f.blocks[j]) if f is not None else 0
                rg = _block_rank(g.blocks[j]) if g is not None else 0
                at_end = idx == len(chain) and self.length.at_cap and self.kind == "injective"
                at_start = idx == 0 and self.length.at_cap and self.kind == "projective"
                if at_end or at_start:
                    continue
                if obj.dims[j] != rf + rg:
                    raise InvariantViolation(f"resolution not exact at position {idx}")


def _block_rank(b: Matrix) -> int:
    return rank(b) if b.rows and b.cols else 0


def min_proj_resolution(m: Module, cap: int | None = None) -> Resolution:
    cap = default_cap() if cap is None else cap
    key = ("projres", cap)
    if key in m._cache:
        return m._cache[key]
    if cap < 1:
        raise ValueError("cap must be at least 1")
    terms, diffs, syz = [], [], []
    if m.dim == 0:
        res = Resolution("projective", m, [], [], None, DimensionReading(-1, cap=cap))
        m._cache[key] = res
        return res
    aug = projective_cover(m)
    terms.append(aug.source)
    current = kernel(aug)  # inclusion Omega^1 -> P_0
    length = None
    for k in range(1, cap + 1):
        omega = current.source
        if omega.dim == 0:
            length = DimensionReading(k - 1, cap=cap)
            break
        syz.append(omega)
        cov = projective_cover(omega)
        terms.append(cov.source)
        diffs.append(cov.then(current))
        current_incl = kernel(cov)
        current = current_incl
    if length is None:
        if current.source.dim == 0:
            length = DimensionReading(cap, cap=cap)
        else:
            syz.append(current.source)
            length = DimensionReading.infinite(cap)
    res = Resolution("projective", m, terms, diffs, aug, length, syz)
    m._cache[key] = res
    return res


def proj_dim(m: Module, cap: int | None = None) -> DimensionReading:
    return min_proj_resolution(m, cap).length


def min_inj_coresolution(m: Module, cap: int | None = None) -> Resolution:
    cap = default_cap() if cap is None else cap
    key = ("injres", cap)
    if key in m._cache:
        return m._cache[key]
    dm = dual(m)
    pres = min_proj_resolution(dm, cap)
    terms = [dual(p) for p in pres.terms]
    aug = None
    diffs = []
    if pres.augmentation is not None:
        aug = dual_morphism(pres.augmentation, source=m, target=terms[0])
        for k, d in enumerate(pres.differentials):
            # d: P_{k+1} -> P_k dualises to I_k -> I_{k+1}
            diffs.append(dual_morphism(d, source=terms[k], target=terms[k + 1]))
    res = Resolution("injective", m, terms, diffs, aug, pres.length, [dual(s) for s in pres.syzygies])
    m._cache[key] = res
    return res


def inj_dim(m: Module, cap: int | None = None) -> DimensionReading:
    return min_inj_coresolution(m, cap).length


def syzygy(m: Module, k: int) -> Module:
    if k == 0:
        return m
    res = min_proj_resolution(m, max(k, 1))
    if len(res.syzygies) >= k:
        return res.syzygies[k - 1]
    from .modules import zero_module

    return zero_module(m.algebra)


# ---------------------------------------------------------------------------
# algebra-level dimensions


def _cached(alg: Algebra, key, fn):
    store = alg.__dict__.setdefault("_homological", {})
    if key not in store:
        store[key] = fn()
    return store[key]


def regular(alg: Algebra) -> Module:
    return _cached(alg, "regular", lambda: regular_module(alg))


def simples(alg: Algebra) -> list[Module]:
    return _cached(alg, "simples", lambda: [simple_module(alg, i) for i in range(alg.n)])


def global_dimension(alg: Algebra, cap: int | None = None) -> DimensionReading:
    cap = default_cap() if cap is None else cap
    return max_reading((proj_dim(s, cap) for s in simples(alg)), cap)


def dominant_dimension(alg: Algebra, cap: int | None = None) -> DimensionReading:
    """Number of leading projective terms in the minimal injective coresolution of A_A."""
    cap = default_cap() if cap is None else cap
    res = min_inj_coresolution(regular(alg), cap)
    count = 0
    for term in res.terms:
        if not is_projective(term):
            return DimensionReading(count, cap=cap)
        count += 1
    return DimensionReading.infinite(cap)


# ---------------------------------------------------------------------------
# Ext


def _flatten_basis(maps: list[Morphism]) -> SpanCoordinates | None:
    if not maps:
        return None
    return SpanCoordinates([f.flat() for f in maps], len(maps[0].flat()))


def ext_dimension(m: Module, n: Module, j: int, cap: int | None = None) -> int:
    """dim Ext^j(m, n) from Hom(P_*, n) on the minimal projective resolution of m."""
    cap = default_cap() if cap is None else cap
    if j < 0:
        raise ValueError("Ext degree must be non-negative")
    res = min_proj_resolution(m, max(cap, j + 1))
    terms = res.terms
    if j >= len(terms):
        return 0
    homs = [hom_basis(p, n) for p in terms[: j + 2]]

    def cochain_rank(k: int) -> int:
        # delta^k: Hom(P_k, n) -> Hom(P_{k+1}, n), f -> d_{k+1} then f
        if k < 0 or k + 1 >= len(terms) or k + 1 >= len(homs):
            return 0
        src, dst = homs[k], homs[k + 1]
        if not src or not dst:
            return 0
        coords = _flatten_basis(dst)
        d = res.differentials[k]
        cols = []
        for f in src:
            c = coords.coords(d.then(f).flat())
            if c is None:
                raise InvariantViolation("Hom complex map left its target space")
            cols.append(c)
        return rank(Matrix(cols, len(dst)))

    return len(homs[j]) - cochain_rank(j) - cochain_rank(j - 1)


# ---------------------------------------------------------------------------
# cogeneration


def is_cogenerated_by_projectives(m: Module) -> bool:
    """True iff the kernels of all maps m -> A_A meet in zero."""
    if m.dim == 0:
        return True
    maps = hom_basis(m, regular(m.algebra))
    for i, d in enumerate(m.dims):
        if d == 0:
            continue
        blocks = [f.blocks[i] for f in maps if f.blocks[i].cols]
        if not blocks or rank(hstack(blocks, d)) < d:
            return False
    return True
