"""Deterministic finite module corpora used as sampling surfaces for the suites."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra
from .homology import injective_envelope, syzygy
from .iso import fingerprint, is_isomorphic
from .modules import (
    Module,
    cokernel,
    direct_sum,
    indec_injective,
    indec_projective,
    projective_sum,
    radical_submodule,
    simple_module,
    socle,
    submodule_generated,
)

DEFAULT_CORPUS_CAP = 60


@dataclass
class Corpus:
    algebra: Algebra
    modules: list[Module] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    cap: int = DEFAULT_CORPUS_CAP
    _by_print: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.modules)

    def __iter__(self):
        return iter(zip(self.modules, self.provenance))

    def add(self, m: Module, prov: str) -> bool:
        """Append m unless it is zero or isomorphic to an existing entry."""
        if m.dim == 0:
            return False
        m.verify()
        fp = fingerprint(m)
        bucket = self._by_print.setdefault(fp, [])
        for x in bucket:
            if is_isomorphic(m, x):  # Inconclusive propagates to the caller
                return False
        bucket.append(m)
        m.name = m.name or prov
        self.modules.append(m)
        self.provenance.append(prov)
        return True


def _path_vectors(alg: Algebra, i: int) -> list[tuple[str, tuple]]:
    p, positions = projective_sum(alg, [i])
    offs = p.offsets
    out = []
    for k, (j, loc) in sorted(positions[0].items()):
        v = [0] * p.dim
        v[offs[j] + loc] = 1
        out.append((alg.basis_labels[k], tuple(v)))
    return out


def tag(prefix: str, label: str) -> str:
    return f"{prefix}{label}" if label.isalnum() else f"{prefix}[{label}]"


def seed_modules(alg: Algebra) -> list[tuple[Module, str]]:
    lab = [tag("", v) for v in alg.vertex_labels]
    seeds: list[tuple[Module, str]] = []
    for i in range(alg.n):
        seeds.append((simple_module(alg, i), f"S{lab[i]}"))
    for i in range(alg.n):
        seeds.append((indec_projective(alg, i), f"P{lab[i]}"))
    for i in range(alg.n):
        seeds.append((indec_injective(alg, i), f"I{lab[i]}"))
    for i in range(alg.n):
        p = indec_projective(alg, i)
        seeds.append((radical_submodule(p).source, f"rad P{lab[i]}"))
        seeds.append((cokernel(socle(p)).target, f"P{lab[i]}/soc"))
    for i in range(alg.n):
        s = simple_module(alg, i)
        for k in (1, 2):
            seeds.append((syzygy(s, k), f"syz^{k} S{lab[i]}"))
    for i in range(alg.n):
        p = indec_projective(alg, i)
        for label, v in _path_vectors(alg, i):
            sub, inc = submodule_generated(p, [v])
            seeds.append((sub, f"{label}A in P{lab[i]}"))
            seeds.append((cokernel(inc).target, f"P{lab[i]}/{label}A"))
    envelopes = [(injective_envelope(m).target, f"I({prov})") for m, prov in seeds if m.dim]
    return seeds + envelopes


def build_corpus(alg: Algebra, cap: int = DEFAULT_CORPUS_CAP) -> Corpus:
    """Seeds first (never truncated), then pairwise sums of distinct entries until ``cap``."""
    corpus = Corpus(alg, cap=cap)
    for m, prov in seed_modules(alg):
        corpus.add(m, prov)
    j = 1
    while len(corpus) < cap and j < len(corpus):
        for i in range(j):
            if len(corpus) >= cap:
                break
            a, b = corpus.modules[i], corpus.modules[j]
            corpus.add(direct_sum([a, b], alg), f"{corpus.provenance[i]} + {corpus.provenance[j]}")
        j += 1
    return corpus
