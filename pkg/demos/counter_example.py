"""Walk through the four-vertex algebra whose pd <= 1 modules are detected by
socles although it is not an Auslander algebra.

Run with:  python3 demos/counter_example.py
"""

from alk.homology import dominant_dimension, global_dimension, is_injective, is_projective, proj_dim, simples
from alk.io import load_fixture
from alk.modules import indec_injective, socle
from alk.suites import suite_p1_property, suite_prop31, suite_thmA, suite_thmC


def main() -> None:
    a = load_fixture("e1")
    print(f"{a.name}: quiver 1 -alpha-> 2 -beta-> 3 <-gamma- 4, relation alpha then beta = 0")
    print(f"dimension {a.dim}, basis {', '.join(a.basis_labels)}")

    print("\nprojective dimensions of the simples:")
    for i, s in enumerate(simples(a)):
        print(f"  S{a.vertex_labels[i]}: pd {proj_dim(s)}")
    print(f"gl.dim {global_dimension(a)}, dominant dimension {dominant_dimension(a)}")

    s4 = simples(a)[3]
    print(f"\nS4 injective: {is_injective(s4)}, projective: {is_projective(s4)}")

    print("\nindecomposable injectives and their socles:")
    for i in range(a.n):
        inj = indec_injective(a, i)
        spd = proj_dim(socle(inj).source)
        print(f"  I{a.vertex_labels[i]} dims {inj.dims}: projective {is_projective(inj)}, pd soc {spd}")

    print("\nsuites:")
    for rep in (suite_p1_property(a), suite_thmC(a), suite_thmA(a), suite_prop31(a, expect_fail=True)):
        tag = " (negative control)" if rep.expect_fail else ""
        print(f"  {rep.suite:12s} {rep.verdict}{tag}  {rep.counts()}")
    r = suite_thmC(a).cases[0].readings
    print(f"\nAuslander predicate {r['lhs']}, injective-socle side {r['rhs']}: the two sides agree.")


if __name__ == "__main__":
    main()
