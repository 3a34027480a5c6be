"""Property suites over finite corpora.

Each suite returns a :class:`SuiteReport` whose case records carry every
reading used to reach the case verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra
from .ar import tau
from .auslander import EndAlgebraBundle, hom_functor_module
from .corpus import DEFAULT_CORPUS_CAP, Corpus, build_corpus, tag
from .homology import (
    DimensionReading,
    default_cap,
    dominant_dimension,
    global_dimension,
    inj_dim,
    injective_envelope,
    is_projective,
    min_proj_resolution,
    proj_dim,
    projective_cover,
    regular,
    simples,
    ext_dimension,
)
from .iso import Inconclusive, is_isomorphic
from .modules import (
    Module,
    cokernel,
    hom_dim,
    indec_injective,
    kernel,
    radical_submodule,
    socle,
    top,
    top_dims,
    zero_module,
)

PASS, FAIL, INCONCLUSIVE, SKIPPED = "pass", "fail", "inconclusive", "skipped"

DOMDIM_NOTE = (
    "the Auslander predicate requires dominant dimension >= 2, a lower bound; "
    "an upper bound of 2 is treated as a misprint"
)


@dataclass
class Case:
    inputs: dict
    readings: dict
    verdict: str
    note: str = ""

    def to_json(self) -> dict:
        out = {"inputs": self.inputs, "readings": self.readings, "verdict": self.verdict}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class SuiteReport:
    suite: str
    algebra: str
    cases: list[Case] = field(default_factory=list)
    expect_fail: bool = False
    notes: list[str] = field(default_factory=list)
    corpus_size: int | None = None

    @property
    def verdict(self) -> str:
        verdicts = {c.verdict for c in self.cases}
        if INCONCLUSIVE in verdicts:
            return INCONCLUSIVE
        if FAIL in verdicts:
            return FAIL
        return PASS

    @property
    def ok(self) -> bool:
        """Whether the outcome matches expectation (a fail under expect_fail is ok)."""
        v = self.verdict
        return v == FAIL if self.expect_fail else v == PASS

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0, SKIPPED: 0}
        for c in self.cases:
            out[c.verdict] += 1
        return out

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "algebra": self.algebra,
            "verdict": self.verdict,
            "expect_fail": self.expect_fail,
            "ok": self.ok,
            "counts": self.counts(),
            "cases": [c.to_json() for c in self.cases],
            "notes": list(self.notes),
        }
        if self.corpus_size is not None:
            out["corpus_size"] = self.corpus_size
        return out


def _lam(target) -> Algebra:
    return target.lam if isinstance(target, EndAlgebraBundle) else target


def _mname(m: Module) -> str:
    return m.name or str(list(m.dims))


def _iso(a: Module, b: Module):
    """True/False, or None when the isomorphism search was inconclusive."""
    try:
        return is_isomorphic(a, b)
    except Inconclusive:
        return None


def _verdict(flags) -> str:
    flags = list(flags)
    if any(f is None for f in flags):
        return INCONCLUSIVE
    return PASS if all(flags) else FAIL


def _corpus(alg: Algebra, corpus: Corpus | None, corpus_cap: int) -> Corpus:
    return corpus if corpus is not None else build_corpus(alg, corpus_cap)


# ---------------------------------------------------------------------------
# injectives and socles


def _injective_socle_case(alg: Algebra, i: int, cap: int) -> Case:
    inj = indec_injective(alg, i)
    proj = is_projective(inj)
    spd = proj_dim(socle(inj).source, cap)
    return Case(
        {"module": tag("I", alg.vertex_labels[i]), "dims": list(inj.dims)},
        {"projective": proj, "pd_socle": spd},
        PASS if proj == (spd <= 1) else FAIL,
    )


def suite_thmA(target, cap: int | None = None) -> SuiteReport:
    """Indecomposable injective I is projective iff pd soc I <= 1."""
    cap = default_cap() if cap is None else cap
    alg = _lam(target)
    rep = SuiteReport("thmA", alg.name)
    rep.cases = [_injective_socle_case(alg, i, cap) for i in range(alg.n)]
    return rep


def _socle_biconditional(alg: Algebra, m: Module, name: str, cap: int, with_two: bool) -> Case:
    pd = proj_dim(m, cap)
    spd = proj_dim(socle(m).source, cap) if m.dim else DimensionReading(-1, cap=cap)
    le1 = (pd <= 1) == (spd <= 1)
    eq2 = (pd == 2) == (spd == 2)
    flags = [le1, eq2] if with_two else [le1]
    readings = {"pd": pd, "pd_socle": spd, "le1_agrees": le1, "eq2_agrees": eq2}
    return Case({"module": name, "dims": list(m.dims)}, readings, _verdict(flags))


def suite_thmB(target, cap: int | None = None, corpus: Corpus | None = None,
               corpus_cap: int = DEFAULT_CORPUS_CAP) -> SuiteReport:
    """pd M <= 1 iff pd soc M <= 1, and pd M = 2 iff pd soc M = 2, over the corpus."""
    cap = default_cap() if cap is None else cap
    alg = _lam(target)
    corpus = _corpus(alg, corpus, corpus_cap)
    rep = SuiteReport("thmB", alg.name, corpus_size=len(corpus))
    rep.cases.append(_socle_biconditional(alg, zero_module(alg), "0", cap, True))
    for m, prov in corpus:
        rep.cases.append(_socle_biconditional(alg, m, prov, cap, True))
    return rep


def suite_p1_property(alg: Algebra, cap: int | None = None, corpus: Corpus | None = None,
                      corpus_cap: int = DEFAULT_CORPUS_CAP) -> SuiteReport:
    """Modules of projective dimension <= 1 are exactly those whose socle has pd <= 1."""
    cap = default_cap() if cap is None else cap
    alg = _lam(alg)
    corpus = _corpus(alg, corpus, corpus_cap)
    rep = SuiteReport("p1_property", alg.name, corpus_size=len(corpus))
    rep.notes.append("checks the pd <= 1 biconditional; eq2_agrees is recorded for reference only")
    for m, prov in corpus:
        rep.cases.append(_socle_biconditional(alg, m, prov, cap, False))
    return rep


def auslander_predicate(alg: Algebra, cap: int | None = None) -> tuple[bool, DimensionReading, DimensionReading]:
    gd = global_dimension(alg, cap)
    dd = dominant_dimension(alg, cap)
    return (gd <= 2 and dd >= 2), gd, dd


def suite_thmC(target, cap: int | None = None) -> SuiteReport:
    """(gl.dim <= 2 and domdim >= 2) iff (gl.dim <= 2 and the injective-socle property)."""
    cap = default_cap() if cap is None else cap
    alg = _lam(target)
    lhs, gd, dd = auslander_predicate(alg, cap)
    inj_cases = [_injective_socle_case(alg, i, cap) for i in range(alg.n)]
    inj_ok = all(c.verdict == PASS for c in inj_cases)
    rhs = (gd <= 2) and inj_ok
    readings = {
        "gl_dim": gd,
        "domdim": dd,
        "lhs": lhs,
        "rhs": rhs,
        "injectives": [dict(c.inputs, **c.readings) for c in inj_cases],
    }
    rep = SuiteReport("thmC", alg.name, notes=[DOMDIM_NOTE])
    rep.cases.append(Case({"algebra": alg.name}, readings, PASS if lhs == rhs else FAIL))
    return rep


# ---------------------------------------------------------------------------
# simples of the endomorphism algebra


class NeedsBundle(ValueError):
    pass


def _require_bundle(target, suite: str) -> EndAlgebraBundle:
    if not isinstance(target, EndAlgebraBundle):
        raise NeedsBundle(f"suite {suite} needs an endomorphism-algebra bundle (pass --class)")
    return target


def _simple_resolution_case(bundle: EndAlgebraBundle, i: int, cap: int) -> Case:
    lam = bundle.lam
    mi = bundle.summands[i]
    s = simples(lam)[i]
    res = min_proj_resolution(s, cap)
    pd = res.length
    proj = is_projective(mi)
    readings: dict = {"pd_simple": pd, "summand_projective": proj, "terms": [list(t.dims) for t in res.terms]}
    flags = [(pd <= 1) == proj, (pd == 2) == (not proj)]
    flags.append(_iso(res.terms[0], hom_functor_module(bundle, mi)))
    if proj:
        rad = radical_submodule(mi).source
        if rad.dim == 0:
            flags.append(pd == 0)
            readings["shape"] = "P_M -> S"
        else:
            flags.append(pd == 1)
            if len(res.terms) > 1:
                flags.append(_iso(res.terms[1], hom_functor_module(bundle, rad)))
            readings["shape"] = "P_rad M -> P_M -> S"
    else:
        flags.append(pd == 2)
        t = tau(mi)
        readings["shape"] = "P_tau M -> P_E -> P_M -> S"
        readings["tau_dims"] = list(t.dims)
        if len(res.terms) == 3:
            flags.append(_iso(res.terms[2], hom_functor_module(bundle, t)))
            # E is read off the top of the middle term: P_E = sum of e_j Lambda
            e_dim = sum(c * bundle.summands[j].dim for j, c in enumerate(top_dims(res.terms[1])))
            readings["middle_dim"] = e_dim
            flags.append(e_dim == t.dim + mi.dim)
    return Case({"summand": _mname(mi), "index": i}, readings, _verdict(flags))


def suite_prop21(target, cap: int | None = None) -> SuiteReport:
    """pd S_i <= 1 iff M_i projective, with the two resolution shapes."""
    cap = default_cap() if cap is None else cap
    bundle = _require_bundle(target, "prop21")
    rep = SuiteReport("prop21", bundle.lam.name)
    rep.cases = [_simple_resolution_case(bundle, i, cap) for i in range(bundle.lam.n)]
    return rep


def suite_prop31(target, cap: int | None = None, expect_fail: bool = False) -> SuiteReport:
    """pd S_i <= 1 iff S_i embeds in soc of the regular module."""
    cap = default_cap() if cap is None else cap
    alg = _lam(target)
    soc = socle(regular(alg)).source
    rep = SuiteReport("prop31", alg.name, expect_fail=expect_fail)
    for i, s in enumerate(simples(alg)):
        pd = proj_dim(s, cap)
        h = hom_dim(s, soc)
        rep.cases.append(
            Case({"simple": tag("S", alg.vertex_labels[i])}, {"pd": pd, "hom_into_socle": h},
                 PASS if (pd <= 1) == (h > 0) else FAIL)
        )
    return rep


# ---------------------------------------------------------------------------
# global checks and short exact sequence bounds


def _ext_pattern_cases(bundle: EndAlgebraBundle, cap: int) -> list[Case]:
    lam = bundle.lam
    reg = regular(lam)
    out = []
    for i, mi in enumerate(bundle.summands):
        if is_projective(mi):
            continue
        dims = [ext_dimension(simples(lam)[i], reg, j, cap) for j in range(4)]
        ok = dims[0] == 0 and dims[1] == 0 and dims[2] > 0 and dims[3] == 0
        out.append(Case({"check": "ext_into_regular", "summand": _mname(mi), "index": i},
                        {"ext_dims": dims}, PASS if ok else FAIL))
    return out


def short_exact_sequences(corpus: Corpus) -> list[tuple[str, Module, Module, Module]]:
    """(kind, L, M, N) with 0 -> L -> M -> N -> 0 and L, N nonzero."""
    out = []
    for m, prov in corpus:
        soc = socle(m)
        out.append((f"socle:{prov}", soc.source, m, cokernel(soc).target))
        rad = radical_submodule(m)
        out.append((f"radical:{prov}", rad.source, m, top(m).target))
        env = injective_envelope(m)
        out.append((f"envelope:{prov}", m, env.target, cokernel(env).target))
        cov = projective_cover(m)
        out.append((f"cover:{prov}", kernel(cov).source, cov.source, m))
    return [t for t in out if t[1].dim and t[3].dim]


def ses_case(kind: str, lm: Module, mm: Module, nm: Module, cap: int) -> Case:
    pl, pm, pn = proj_dim(lm, cap), proj_dim(mm, cap), proj_dim(nm, cap)
    readings = {"pd_L": pl, "pd_M": pm, "pd_N": pn}
    inputs = {"check": "ses_pd_bounds", "sequence": kind, "dims": [list(lm.dims), list(mm.dims), list(nm.dims)]}
    if pl.at_cap or pm.at_cap or pn.at_cap:
        return Case(inputs, readings, SKIPPED, note="skipped: infinite")
    a, b, c = pl.value, pm.value, pn.value
    clauses = {
        "N<=max(M,1+L)": c <= max(b, 1 + a) and (b == a or c == max(b, 1 + a)),
        "L<=max(M,N-1)": a <= max(b, c - 1) and (b == c or a == max(b, c - 1)),
        "M<=max(L,N)": b <= max(a, c) and (c == 1 + a or b == max(a, c)),
    }
    readings["clauses"] = clauses
    return Case(inputs, readings, PASS if all(clauses.values()) else FAIL)


def suite_lemmas(target, cap: int | None = None, corpus: Corpus | None = None,
                 corpus_cap: int = DEFAULT_CORPUS_CAP) -> SuiteReport:
    cap = default_cap() if cap is None else cap
    alg = _lam(target)
    rep = SuiteReport("lemmas", alg.name)
    if isinstance(target, EndAlgebraBundle):
        rep.cases.extend(_ext_pattern_cases(target, cap))
    gd = global_dimension(alg, cap)
    if gd == 2:
        spd = proj_dim(socle(regular(alg)).source, cap)
        rep.cases.append(Case({"check": "pd_socle_regular"}, {"gl_dim": gd, "pd_socle_regular": spd},
                              PASS if spd <= 1 else FAIL))
    else:
        rep.notes.append(f"pd_socle_regular not applicable: gl.dim reads {gd}")
    if gd.finite:
        idim = inj_dim(regular(alg), cap)
        rep.cases.append(Case({"check": "inj_dim_regular"}, {"gl_dim": gd, "inj_dim_regular": idim},
                              PASS if idim == gd else FAIL))
    else:
        rep.notes.append(f"inj_dim_regular not applicable: gl.dim reads {gd}")
    corpus = _corpus(alg, corpus, corpus_cap)
    rep.corpus_size = len(corpus)
    for kind, lm, mm, nm in short_exact_sequences(corpus):
        rep.cases.append(ses_case(kind, lm, mm, nm, cap))
    return rep


SUITES = ("thmA", "thmB", "thmC", "prop21", "prop31", "lemmas", "p1_property")
BUNDLE_SUITES = ("thmA", "thmB", "prop21", "prop31")
