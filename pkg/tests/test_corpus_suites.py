import json

import pytest

from alk.corpus import build_corpus, tag
from alk.homology import proj_dim
from alk.iso import is_indecomposable, is_isomorphic
from alk.modules import cokernel, direct_sum, indec_projective, radical_power, simple_module, socle
from alk.report import canonical_json, report_emit, reports_document
from alk.suites import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    SKIPPED,
    Case,
    NeedsBundle,
    SuiteReport,
    ses_case,
    short_exact_sequences,
    suite_lemmas,
    suite_p1_property,
    suite_prop21,
    suite_prop31,
    suite_thmA,
    suite_thmB,
    suite_thmC,
)

from conftest import R_INPUTS


def test_corpus_e0_is_one_module(alg):
    c = build_corpus(alg("e0"))
    assert len(c) == 1


def test_corpus_e1_contents(corpus, alg):
    c = corpus("e1")
    assert len(c) == 60
    assert any(m.dims == (0, 1, 1, 1) for m, _ in c)
    for m, _ in c:
        m.verify()
    for i, m in enumerate(c.modules):
        for x in c.modules[i + 1:]:
            if m.dims == x.dims:
                assert not is_isomorphic(m, x)


def test_corpus_cap_respected(alg):
    c = build_corpus(alg("e1"), cap=5)
    # the seeds alone exceed 5 entries and are never truncated
    assert len(c) > 5 and all("+" not in p for p in c.provenance)


def test_corpus_over_dual_numbers_auslander_has_every_indecomposable(corpus, bundle):
    lam = bundle("e2").lam
    c = corpus("e2", over_bundle=True)
    uniserials = []
    for i in range(lam.n):
        p = indec_projective(lam, i)
        k = 1
        while True:
            q = cokernel(radical_power(p, k)).target
            uniserials.append(q)
            if q.dim == p.dim:
                break
            k += 1
    assert len(uniserials) == 5
    for u in uniserials:
        assert is_indecomposable(u)
        assert any(is_isomorphic(u, m) for m in c.modules if m.dims == u.dims)


def test_corpus_deterministic(alg):
    a = build_corpus(alg("e1"), cap=40)
    b = build_corpus(alg("e1"), cap=40)
    assert a.provenance == b.provenance
    assert [m.dims for m in a.modules] == [m.dims for m in b.modules]


def test_tag_escapes_non_alphanumeric_labels():
    assert tag("S", "1") == "S1"
    assert tag("S", "a b") == "S[a b]"


def test_suite_verdict_aggregation():
    rep = SuiteReport("x", "A")
    assert rep.verdict == PASS and rep.ok
    rep.cases = [Case({}, {}, PASS), Case({}, {}, SKIPPED)]
    assert rep.verdict == PASS
    rep.cases.append(Case({}, {}, FAIL))
    assert rep.verdict == FAIL and not rep.ok
    rep.expect_fail = True
    assert rep.ok
    rep.cases.append(Case({}, {}, INCONCLUSIVE))
    assert rep.verdict == INCONCLUSIVE and not rep.ok
    assert rep.counts() == {PASS: 1, FAIL: 1, INCONCLUSIVE: 1, SKIPPED: 1}


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_thmA_on_bundles(bundle, name):
    rep = suite_thmA(bundle(name))
    assert rep.verdict == PASS and len(rep.cases) == bundle(name).lam.n


def test_thmA_on_e1_flags_injective_non_projectives(alg):
    rep = suite_thmA(alg("e1"))
    failed = [c.inputs["module"] for c in rep.cases if c.verdict == FAIL]
    assert failed == ["I3", "I4"]


def test_thmB_zero_case_and_corpus(bundle, corpus):
    rep = suite_thmB(bundle("e2"), corpus=corpus("e2", over_bundle=True))
    assert rep.verdict == PASS
    zero = rep.cases[0]
    assert zero.inputs["module"] == "0" and zero.readings["pd"] == -1
    assert rep.corpus_size == 60


def test_sum_of_pd0_and_pd2_reads_two(bundle, corpus):
    from alk.suites import _socle_biconditional

    lam = bundle("e3").lam
    c = corpus("e3", over_bundle=True)
    p0 = next(m for m in c.modules if proj_dim(m) == 0)
    p2 = next(m for m in c.modules if proj_dim(m) == 2)
    s = direct_sum([p0, p2])
    case = _socle_biconditional(lam, s, "sum", 12, True)
    assert case.readings["pd"] == 2 and case.readings["pd_socle"] == 2
    assert case.verdict == PASS


def test_thmC_examples(alg, bundle):
    e1 = suite_thmC(alg("e1"))
    r = e1.cases[0].readings
    assert e1.verdict == PASS and r["lhs"] is False and r["rhs"] is False
    assert r["domdim"] == 0 and r["gl_dim"] == 2
    for case in (suite_thmC(bundle("e2")), suite_thmC(alg("e0"))):
        assert case.verdict == PASS and case.cases[0].readings["lhs"] is True


def test_p1_property_e1(alg, corpus):
    rep = suite_p1_property(alg("e1"), corpus=corpus("e1"))
    assert rep.verdict == PASS and len(rep.cases) == 60
    assert suite_p1_property(alg("e0")).verdict == PASS


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_prop21_on_bundles(bundle, name):
    rep = suite_prop21(bundle(name))
    assert rep.verdict == PASS
    shapes = {c.readings["shape"] for c in rep.cases}
    assert "P_tau M -> P_E -> P_M -> S" in shapes


def test_prop21_shapes_dual_numbers(bundle):
    rep = suite_prop21(bundle("e2"))
    summands = bundle("e2").summands
    by_dim = {summands[c.inputs["index"]].dim: c.readings for c in rep.cases}
    assert by_dim[2]["shape"] == "P_rad M -> P_M -> S"
    assert by_dim[1]["shape"] == "P_tau M -> P_E -> P_M -> S" and by_dim[1]["tau_dims"] == [1]


def test_prop21_requires_bundle(alg):
    with pytest.raises(NeedsBundle):
        suite_prop21(alg("e1"))


def test_prop31_negative_control(alg):
    rep = suite_prop31(alg("e1"), expect_fail=True)
    assert rep.verdict == FAIL and rep.ok
    bad = [c for c in rep.cases if c.verdict == FAIL]
    assert [c.inputs["simple"] for c in bad] == ["S4"]
    assert bad[0].readings["pd"] == 1 and bad[0].readings["hom_into_socle"] == 0


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_prop31_on_bundles(bundle, name):
    assert suite_prop31(bundle(name)).verdict == PASS


def test_lemmas_suite_e1(alg, corpus):
    rep = suite_lemmas(alg("e1"), corpus=corpus("e1"))
    assert rep.verdict == PASS
    soc_case = [c for c in rep.cases if c.inputs.get("check") == "pd_socle_regular"]
    assert soc_case and soc_case[0].readings["pd_socle_regular"] <= 1


def test_lemmas_suite_e0():
    from alk.io import load_fixture

    rep = suite_lemmas(load_fixture("e0"))
    inj_case = [c for c in rep.cases if c.inputs.get("check") == "inj_dim_regular"]
    assert inj_case[0].readings["gl_dim"] == 0 and inj_case[0].readings["inj_dim_regular"] == 0


def test_ses_generation_is_exact(corpus):
    c = corpus("e1")
    seqs = short_exact_sequences(c)
    assert len(seqs) >= 100
    for _, lm, mm, nm in seqs[:40]:
        assert lm.dim + nm.dim == mm.dim and lm.dim and nm.dim


def test_ses_case_skips_infinite(alg):
    e2 = alg("e2")
    s = simple_module(e2, 0)
    inc = socle(indec_projective(e2, 0))
    case = ses_case("test", inc.source, indec_projective(e2, 0), s, 12)
    assert case.verdict == SKIPPED and case.note == "skipped: infinite"


def test_report_documents(alg):
    doc = json.loads(report_emit([], None))
    assert doc["suites"] == [] and "sampling" in doc["method"]
    one = json.loads(report_emit([suite_thmC(alg("e1"))], None, caps={"resolution": 12}))
    assert one["caps"] == {"resolution": 12}
    assert one["suites"][0]["verdict"] == PASS


def test_reports_byte_identical(alg):
    a = report_emit([suite_lemmas(alg("e1"), corpus_cap=30)], None)
    b = report_emit([suite_lemmas(alg("e1"), corpus_cap=30)], None)
    assert a == b


def test_canonical_json_rejects_floats():
    from fractions import Fraction

    assert canonical_json({"x": Fraction(1, 2)}).count('"1/2"') == 1
    with pytest.raises(TypeError):
        canonical_json({"x": 0.5})
    assert reports_document([])["suites"] == []
