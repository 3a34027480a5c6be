import pytest
from hypothesis import given, strategies as st

from alk.linalg import Matrix
from alk.modules import (
    AlgebraMismatch,
    ModuleError,
    Morphism,
    cokernel,
    direct_sum,
    dual,
    hom_basis,
    hom_dim,
    identity,
    image,
    indec_injective,
    indec_projective,
    kernel,
    projective_sum,
    radical_submodule,
    regular_module,
    representation,
    simple_module,
    socle,
    socle_dims,
    submodule_generated,
    top,
    top_dims,
    zero_module,
)
from alk.homology import projective_cover
from alk.iso import is_isomorphic


def test_regular_and_projectives_e1(alg):
    a = alg("e1")
    assert regular_module(a).dims == (1, 2, 3, 1)
    p_dims = [indec_projective(a, i).dims for i in range(4)]
    assert p_dims == [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 0), (0, 0, 1, 1)]
    # total dimensions of the e_i A, listed by vertex
    assert [sum(d) for d in p_dims] == [2, 2, 1, 2]
    assert regular_module(a).dim == 7


def test_standard_modules_small(alg):
    assert regular_module(alg("e0")).dim == 1
    assert regular_module(alg("e2")).dim == 2
    e0 = alg("e0")
    s, p, i = simple_module(e0, 0), indec_projective(e0, 0), indec_injective(e0, 0)
    assert s.dim == p.dim == i.dim == 1
    assert is_isomorphic(s, p) and is_isomorphic(p, i)


def test_e1_identifications(alg):
    a = alg("e1")
    assert indec_projective(a, 0).dim == 2
    assert is_isomorphic(indec_projective(a, 2), simple_module(a, 2))
    assert is_isomorphic(indec_injective(a, 3), simple_module(a, 3))
    assert is_isomorphic(indec_injective(a, 1), indec_projective(a, 0))
    assert [indec_injective(a, i).dims for i in range(4)] == [(1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 1, 1), (0, 0, 0, 1)]


def test_hom_spaces(alg):
    a = alg("e1")
    assert hom_basis(simple_module(a, 0), regular_module(a)) == []
    assert hom_dim(regular_module(a), regular_module(a)) == 7
    e2 = alg("e2")
    r, s = regular_module(e2), simple_module(e2, 0)
    assert (hom_dim(r, r), hom_dim(r, s), hom_dim(s, r), hom_dim(s, s)) == (2, 1, 1, 1)


def test_hom_basis_elements_intertwine(alg):
    a = alg("e1")
    mods = [regular_module(a)] + [indec_injective(a, i) for i in range(4)]
    for m in mods:
        for n in mods:
            for f in hom_basis(m, n):
                f.verify()


def test_socles(alg):
    a = alg("e1")
    assert is_isomorphic(socle(indec_projective(a, 0)).source, simple_module(a, 1))
    assert socle_dims(regular_module(a)) == (0, 1, 3, 0)


def test_kernel_of_top_map(alg):
    a = alg("e1")
    pi = projective_cover(simple_module(a, 0))
    assert pi.source.dims == indec_projective(a, 0).dims
    assert is_isomorphic(kernel(pi).source, simple_module(a, 1))


def test_image_cokernel_exact(alg):
    a = alg("e1")
    p = indec_projective(a, 0)
    rad = radical_submodule(p)
    assert image(rad).source.dims == rad.source.dims
    assert cokernel(rad).target.dims == top(p).target.dims == (1, 0, 0, 0)


def test_top_and_radical(alg):
    a = alg("e1")
    assert top_dims(regular_module(a)) == (1, 1, 1, 1)
    assert radical_submodule(regular_module(a)).source.dims == (0, 1, 2, 0)


def test_submodule_generated(alg):
    a = alg("e1")
    p = indec_projective(a, 0)
    sub, inc = submodule_generated(p, [(1, 0)])
    assert sub.dims == p.dims
    sub2, _ = submodule_generated(p, [(0, 1)])
    assert sub2.dims == (0, 1, 0, 0)


def test_representation_e3(alg):
    e3 = alg("e3")
    m = representation(e3, [1, 1], {"a": Matrix([[1]])})
    assert is_isomorphic(m, indec_projective(e3, 0))
    with pytest.raises(ModuleError):
        # relation alpha*beta = 0 must hold in E1
        representation(alg("e1"), [1, 1, 1, 0], {"alpha": Matrix([[1]]), "beta": Matrix([[1]]),
                                                   "gamma": Matrix.zeros(0, 1)})


def test_morphism_shape_and_algebra_checks(alg):
    a, b = alg("e1"), alg("e3")
    with pytest.raises(AlgebraMismatch):
        hom_basis(simple_module(a, 0), simple_module(b, 0))
    s = simple_module(a, 0)
    with pytest.raises(ModuleError):
        Morphism(s, s, [Matrix([[1, 1]])] + [Matrix.zeros(0, 0)] * 3)


def test_projective_sum_positions(alg):
    a = alg("e1")
    m, pos = projective_sum(a, [0, 0, 3])
    assert m.dims == (2, 2, 1, 1)
    assert len(pos) == 3


def test_zero_module(alg):
    z = zero_module(alg("e1"))
    assert z.dim == 0
    assert hom_basis(z, regular_module(alg("e1"))) == []


def _corpus_like(a):
    out = [regular_module(a)]
    for i in range(a.n):
        out += [simple_module(a, i), indec_projective(a, i), indec_injective(a, i)]
    return out


@pytest.mark.parametrize("name", ["e0", "e1", "e2", "e3", "e4", "nakayama_a3_e2"])
def test_dual_involution_and_socle_top_swap(alg, name):
    a = alg(name)
    for m in _corpus_like(a):
        d = dual(m)
        assert d.algebra is a.opposite()
        assert d.dim == m.dim
        assert sum(socle_dims(d)) == sum(top_dims(m))
        dd = dual(d)
        assert dd.algebra is a
        assert is_isomorphic(dd, m)


def test_dual_of_projective_is_injective_over_opposite(alg):
    a = alg("e1")
    d = dual(indec_projective(a, 0))
    assert is_isomorphic(d, indec_injective(a.opposite(), 0))


@given(st.lists(st.integers(0, 6), min_size=1, max_size=3))
def test_direct_sum_additive(picks):
    from alk.io import load_fixture

    a = load_fixture("e1")
    mods = _corpus_like(a)
    chosen = [mods[p % len(mods)] for p in picks]
    s = direct_sum(chosen)
    s.verify()
    assert s.dims == tuple(sum(m.dims[i] for m in chosen) for i in range(a.n))
    identity(s).verify()
