"""Build the endomorphism algebra of all indecomposables over k[x]/(x^2) and
look at the resolutions of its simples.

Run with:  python3 demos/dual_numbers_auslander.py
"""

from alk.ar import EnumerationClass, tau
from alk.auslander import auslander_algebra, hom_functor_module
from alk.homology import dominant_dimension, global_dimension, is_projective, min_proj_resolution, simples
from alk.io import load_fixture
from alk.iso import is_isomorphic
from alk.report import canonical_json


def main() -> None:
    r = load_fixture("e2")
    bundle = auslander_algebra(r, EnumerationClass("nakayama-linear", 2))
    lam = bundle.lam
    print(f"base {r.name} has {len(bundle.summands)} indecomposables: "
          + ", ".join(f"{m.name} (dim {m.dim})" for m in bundle.summands))
    print(f"{lam.name}: dim {lam.dim}, hom dims {bundle.hom_dims()}")
    print(f"quiver arrows {lam.ext_quiver().arrow_counts()}")
    print(f"gl.dim {global_dimension(lam)}, dominant dimension {dominant_dimension(lam)}")

    for i, m in enumerate(bundle.summands):
        res = min_proj_resolution(simples(lam)[i])
        print(f"\nsimple at {m.name}: projective summand {is_projective(m)}, pd {res.length}")
        print(f"  resolution terms by dims: {[t.dims for t in res.terms]}")
        if not is_projective(m):
            t = tau(m)
            same = is_isomorphic(res.terms[-1], hom_functor_module(bundle, t))
            print(f"  tau of {m.name} has dims {t.dims}; last term matches Hom(-, tau M): {same}")

    print("\nsummary JSON:")
    print(canonical_json(bundle.summary()))


if __name__ == "__main__":
    main()
