import pytest

from alk.algebra import (
    Algebra,
    AlgebraError,
    AlgebraPresentation,
    Arrow,
    InvariantViolation,
    NotAdmissible,
    PresentationTooHard,
    Quiver,
    algebra_from_presentation,
    field_algebra,
    path_basis,
)
from oracles import monomial_path_count


def _pres(vertices, arrows, relations=()):
    return AlgebraPresentation(Quiver(vertices, tuple(Arrow(*a) for a in arrows)), relations)


E1_ARROWS = [("alpha", "1", "2"), ("beta", "2", "3"), ("gamma", "4", "3")]


def test_e1_path_basis_matches_brute_force(alg):
    labels = [b.label for b in path_basis(alg("e1").presentation)]
    assert labels == ["e1", "e2", "e3", "e4", "alpha", "beta", "gamma"]
    want = monomial_path_count(["1", "2", "3", "4"], E1_ARROWS, [("alpha", "beta")])
    assert alg("e1").dim == want == 7


def test_small_fixture_bases(alg):
    assert alg("e0").dim == 1 and alg("e0").basis_labels == ("e1",)
    assert alg("e2").basis_labels == ("e1", "a")
    assert alg("e3").basis_labels == ("e1", "e2", "a")
    assert alg("e4").dim == 6
    assert alg("nakayama_a3_e2").dim == 5


def test_unbounded_loop_is_not_admissible():
    pres = _pres(["1"], [("a", "1", "1")])
    with pytest.raises(NotAdmissible):
        path_basis(pres, length_cap=10)


def test_commutativity_relation():
    # square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd
    pres = _pres(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        [((1, ("a", "b")), (-1, ("c", "d")))],
    )
    a = algebra_from_presentation(pres)
    assert a.dim == 4 + 4 + 1
    b = {lab: a.basis_vector(k) for k, lab in enumerate(a.basis_labels)}
    ab, cd = a.mul(b["a"], b["b"]), a.mul(b["c"], b["d"])
    assert any(ab) and ab == cd


def test_presentation_validation():
    with pytest.raises(AlgebraError):
        _pres(["1", "2"], [("a", "1", "2")], [((1, ("a",)),)])
    with pytest.raises(AlgebraError):
        _pres(["1", "2"], [("a", "1", "2"), ("b", "1", "2")], [((1, ("a", "b")),)])
    with pytest.raises(AlgebraError):
        _pres(["1"], [("a", "1", "1")], [((0, ("a", "a")),)])
    with pytest.raises(AlgebraError):
        Quiver(("1",), (Arrow("a", "1", "9"),))


def test_idempotents_and_unit(alg):
    a = alg("e1")
    assert a.n == 4
    assert sum(a.unit) == 4  # sum of the four vertex idempotents


def test_radicals(alg):
    assert alg("e0").radical_basis == []
    assert [list(v) for v in alg("e2").radical_basis] == [[0, 1]]
    rad = alg("e1").radical_basis
    assert len(rad) == 3
    arrow_idx = {alg("e1").basis_labels.index(x) for x in ("alpha", "beta", "gamma")}
    assert all({k for k, x in enumerate(v) if x} <= arrow_idx for v in rad)
    assert alg("e1").radical_squared_basis == []


def test_opposite(alg):
    e2 = alg("e2")
    assert e2.opposite().table == e2.table
    e1 = alg("e1")
    op = e1.opposite()
    assert op.opposite() is e1
    assert op.table != e1.table
    assert op.ext_quiver().arrow_counts() == {("2", "1"): 1, ("3", "2"): 1, ("3", "4"): 1}


def test_ext_quiver_round_trip(alg):
    q1 = alg("e1").ext_quiver()
    assert q1.vertices == ("1", "2", "3", "4")
    assert q1.arrow_counts() == {("1", "2"): 1, ("2", "3"): 1, ("4", "3"): 1}
    assert alg("e0").ext_quiver().arrows == ()


def test_auslander_quiver_of_dual_numbers(bundle):
    counts = bundle("e2").lam.ext_quiver().arrow_counts()
    assert sorted(counts.values()) == [1, 1]
    (s, t), (u, v) = sorted(counts)
    assert (s, t) == (v, u) and s != t


def test_field_algebra():
    f = field_algebra()
    assert f.dim == 1 and f.radical_basis == []


def test_bad_tables_rejected():
    # a 2-dim algebra with a non-orthogonal "idempotent"
    with pytest.raises(InvariantViolation):
        Algebra(["e", "x"], [[{0: 1}, {1: 1}], [{1: 1}, {}]], [(1, 0), (1, 0)])
    # non-associative product on a single vertex
    table = [[{0: 1}, {1: 1}, {2: 1}], [{1: 1}, {2: 1}, {}], [{2: 1}, {1: 1}, {}]]
    with pytest.raises((PresentationTooHard, InvariantViolation)):
        Algebra(["e", "x", "y"], table, [(1, 0, 0)])


def test_non_primitive_idempotent_detected():
    # k x k with the unit as its only idempotent: e A e is not local
    with pytest.raises(InvariantViolation):
        Algebra(["u", "v"], [[{0: 1}, {}], [{}, {1: 1}]], [(1, 1)])


def test_structure_constants_dense(alg):
    c = alg("e3").structure_constants
    assert len(c) == 3 and len(c[0]) == 3 and len(c[0][0]) == 3
