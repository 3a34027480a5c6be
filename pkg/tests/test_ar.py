import pytest

from alk.algebra import AlgebraPresentation, Arrow, Quiver, algebra_from_presentation
from alk.ar import (
    CompletenessCheckFailed,
    EnumerationClass,
    UnsupportedClass,
    dual,
    enumerate_indecomposables,
    in_list,
    tau,
    tau_inv,
    transpose,
)
from alk.homology import is_injective, is_projective
from alk.iso import is_indecomposable, is_isomorphic
from alk.modules import indec_projective, simple_module, socle_dims, top_dims

from conftest import R_INPUTS
from oracles import dual_numbers_reps, interval_reps, nakayama_reps, rep_hom_dim


def test_transpose_examples(alg):
    e2 = alg("e2")
    assert transpose(simple_module(e2, 0)).dim == 1
    assert transpose(indec_projective(e2, 0)).dim == 0
    e3 = alg("e3")
    tr = transpose(simple_module(e3, 0))
    assert tr.algebra is e3.opposite() and tr.dim == 1


def test_tau_examples(alg):
    e2 = alg("e2")
    s = simple_module(e2, 0)
    assert is_isomorphic(tau(s), s)
    assert is_isomorphic(tau_inv(tau(s)), s)
    e3 = alg("e3")
    t = tau(simple_module(e3, 0))
    assert is_isomorphic(t, indec_projective(e3, 1))
    assert is_isomorphic(t, simple_module(e3, 1))


@pytest.mark.parametrize("name", ["e0", "e1", "e2", "e3", "e4", "nakayama_a3_e2"])
def test_tau_kills_projectives(alg, name):
    a = alg(name)
    for i in range(a.n):
        assert tau(indec_projective(a, i)).dim == 0


def test_enumeration_counts(alg):
    assert [m.dims for m in enumerate_indecomposables(alg("e3"), R_INPUTS["e3"])] == [(0, 1), (1, 0), (1, 1)]
    assert len(enumerate_indecomposables(alg("e4"), R_INPUTS["e4"])) == 6
    assert [m.dim for m in enumerate_indecomposables(alg("e2"), R_INPUTS["e2"])] == [1, 2]
    assert len(enumerate_indecomposables(alg("nakayama_a3_e2"), R_INPUTS["nakayama_a3_e2"])) == 5


@pytest.mark.parametrize("name,oracle", [
    ("e2", dual_numbers_reps()),
    ("e3", interval_reps(2)),
    ("e4", interval_reps(3)),
    ("nakayama_a3_e2", nakayama_reps(3, 2)),
])
def test_enumeration_matches_hand_listing(alg, name, oracle):
    arrows, reps = oracle
    mods = enumerate_indecomposables(alg(name), R_INPUTS[name])
    assert sorted(m.dims for m in mods) == sorted(tuple(d) for d, _ in reps)
    # endomorphism rings of the hand-written representations are all one-dimensional or local
    for d, mp in reps:
        assert rep_hom_dim(d, mp, d, mp, arrows) >= 1


def test_any_orientation(alg):
    pres = AlgebraPresentation(Quiver(("1", "2", "3"), (Arrow("a", "1", "2"), Arrow("b", "3", "2"))))
    a = algebra_from_presentation(pres, name="A3zig")
    with pytest.raises(UnsupportedClass):
        enumerate_indecomposables(a, EnumerationClass("linear-An"))
    mods = enumerate_indecomposables(a, EnumerationClass("any-orientation-An"))
    assert len(mods) == 6


def test_unsupported_inputs(alg):
    with pytest.raises(UnsupportedClass):
        EnumerationClass("tame")
    with pytest.raises(UnsupportedClass):
        enumerate_indecomposables(alg("e1"), EnumerationClass("linear-An"))
    with pytest.raises(UnsupportedClass):
        enumerate_indecomposables(alg("e1"), EnumerationClass("nakayama-linear"))
    with pytest.raises(UnsupportedClass):
        enumerate_indecomposables(alg("e2"), EnumerationClass("nakayama-linear", 3))
    with pytest.raises(UnsupportedClass):
        enumerate_indecomposables(alg("e4"), EnumerationClass("nakayama-linear", 2))
    kronecker = algebra_from_presentation(
        AlgebraPresentation(Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2"))))
    )
    with pytest.raises(UnsupportedClass):
        enumerate_indecomposables(kronecker, EnumerationClass("any-orientation-An"))


def test_completeness_error_type():
    assert issubclass(CompletenessCheckFailed, Exception)


@pytest.mark.parametrize("name", sorted(R_INPUTS))
def test_enumerator_invariants(alg, name):
    mods = enumerate_indecomposables(alg(name), R_INPUTS[name])
    for i, m in enumerate(mods):
        assert is_indecomposable(m)
        for x in mods[i + 1 :]:
            assert not is_isomorphic(m, x)
    for m in mods:
        d = dual(m)
        assert d.dim == m.dim and sum(socle_dims(d)) == sum(top_dims(m))
        assert is_isomorphic(dual(d), m)
        if not is_projective(m):
            t = tau(m)
            assert in_list(t, mods)
            assert is_isomorphic(tau_inv(t), m)
        else:
            assert tau(m).dim == 0
        if not is_injective(m):
            assert is_isomorphic(tau(tau_inv(m)), m)
        else:
            assert tau_inv(m).dim == 0
