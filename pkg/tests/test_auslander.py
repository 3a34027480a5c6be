import pytest

from alk.algebra import InvariantViolation
from alk.ar import EnumerationClass, enumerate_indecomposables, tau
from alk.auslander import auslander_algebra, bundle_dot, end_algebra, hom_functor_module
from alk.homology import dominant_dimension, global_dimension, is_projective, min_proj_resolution, simples
from alk.iso import is_isomorphic
from alk.modules import direct_sum, hom_dim, indec_projective, radical_submodule, regular_module, zero_module

from conftest import R_INPUTS
from oracles import auslander_dim, dual_numbers_reps, interval_reps, nakayama_reps

ORACLES = {
    "e2": dual_numbers_reps,
    "e3": lambda: interval_reps(2),
    "e4": lambda: interval_reps(3),
    "nakayama_a3_e2": lambda: nakayama_reps(3, 2),
}


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_dimension_matches_sympy_oracle(bundle, name):
    b = bundle(name)
    want = auslander_dim(*ORACLES[name]())
    assert b.lam.dim == want == sum(sum(r) for r in b.hom_dims())


def test_frozen_dimensions(bundle):
    # frozen from the sympy oracle above
    assert bundle("e2").lam.dim == 5
    assert bundle("e3").lam.dim == 5
    assert bundle("e4").lam.dim == 15
    assert bundle("nakayama_a3_e2").lam.dim == 10


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_auslander_property(bundle, name):
    lam = bundle(name).lam
    assert global_dimension(lam) <= 2
    assert dominant_dimension(lam) >= 2


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_yoneda(bundle, name):
    b = bundle(name)
    for i, m in enumerate(b.summands):
        assert is_isomorphic(hom_functor_module(b, m), indec_projective(b.lam, i))


def test_idempotents_are_identities(bundle):
    b = bundle("e4")
    for i, e in enumerate(b.lam.idempotents):
        support = [k for k, x in enumerate(e) if x]
        assert all(b.basis_book[k][:2] == (i, i) for k in support)


def test_hom_functor_examples(alg, bundle):
    b = bundle("e2")
    s = simples(alg("e2"))[0]
    p = hom_functor_module(b, s)
    assert p.dim == 2
    idx = [m.dim for m in b.summands].index(1)
    assert is_isomorphic(p, indec_projective(b.lam, idx))
    assert hom_functor_module(b, zero_module(alg("e2"))).dim == 0


def test_hom_functor_additive(alg, bundle):
    b = bundle("e3")
    x = direct_sum(b.summands[:2])
    f = hom_functor_module(b, x)
    assert f.dim == sum(hom_dim(m, x) for m in b.summands)
    assert is_isomorphic(f, direct_sum([hom_functor_module(b, m) for m in b.summands[:2]]))


def test_trivial_nakayama(alg):
    b = auslander_algebra(alg("e0"), EnumerationClass("nakayama-linear", 1))
    assert b.lam.dim == 1 and b.lam.radical_basis == []
    assert global_dimension(b.lam) == 0
    b2 = end_algebra([regular_module(alg("e0"))])
    assert b2.lam.dim == 1


def test_preconditions(alg):
    e2 = alg("e2")
    r = regular_module(e2)
    with pytest.raises(ValueError):
        end_algebra([])
    with pytest.raises(InvariantViolation):
        end_algebra([r, r])
    with pytest.raises(InvariantViolation):
        end_algebra([direct_sum([r, r])])


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_resolution_dichotomy(bundle, name):
    b = bundle(name)
    for i, m in enumerate(b.summands):
        res = min_proj_resolution(simples(b.lam)[i])
        if is_projective(m):
            assert res.length <= 1
            rad = radical_submodule(m).source
            if rad.dim:
                assert is_isomorphic(res.terms[1], hom_functor_module(b, rad))
        else:
            assert res.length == 2
            assert is_isomorphic(res.terms[2], hom_functor_module(b, tau(m)))


def test_e3_resolution_of_injective_simple(alg, bundle):
    b = bundle("e3")
    e3 = alg("e3")
    i = [m.dims for m in b.summands].index((1, 0))
    res = min_proj_resolution(simples(b.lam)[i])
    assert res.length == 2
    assert is_isomorphic(res.terms[2], hom_functor_module(b, indec_projective(e3, 1)))


def test_summary_and_dot(bundle):
    b = bundle("e2")
    s = b.summary()
    assert s["dim"] == 5 and s["hom_dims"] == [[1, 1], [1, 2]]
    assert len(s["quiver"]["arrows"]) == 2
    dot = bundle_dot(b)
    edges = [ln for ln in dot.splitlines() if '" -> "' in ln]
    assert dot.startswith("digraph") and len(edges) == 2


def test_summand_order_follows_enumerator(alg, bundle):
    mods = enumerate_indecomposables(alg("e4"), R_INPUTS["e4"])
    assert [m.dims for m in bundle("e4").summands] == [m.dims for m in mods]
