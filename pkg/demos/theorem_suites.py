"""Run every property suite on each shipped representation-finite input and
write a combined JSON report.

Run with:  python3 demos/theorem_suites.py [out.json]
"""

import sys

from alk.ar import EnumerationClass
from alk.auslander import auslander_algebra
from alk.corpus import build_corpus
from alk.io import load_fixture
from alk.report import report_emit
from alk.suites import (
    DOMDIM_NOTE,
    suite_lemmas,
    suite_p1_property,
    suite_prop21,
    suite_prop31,
    suite_thmA,
    suite_thmB,
    suite_thmC,
)

INPUTS = [
    ("e2", EnumerationClass("nakayama-linear", 2)),
    ("e3", EnumerationClass("linear-An")),
    ("e4", EnumerationClass("linear-An")),
    ("nakayama_a3_e2", EnumerationClass("nakayama-linear", 2)),
]


def main(out=None) -> int:
    reports = []
    for name, cls in INPUTS:
        b = auslander_algebra(load_fixture(name), cls)
        corpus = build_corpus(b.lam)
        print(f"{b.lam.name}: dim {b.lam.dim}, corpus of {len(corpus)} modules")
        for rep in (suite_thmA(b), suite_thmB(b, corpus=corpus), suite_thmC(b), suite_prop21(b),
                    suite_prop31(b), suite_lemmas(b, corpus=corpus), suite_p1_property(b, corpus=corpus)):
            print(f"  {rep.suite:12s} {rep.verdict:5s} {rep.counts()}")
            reports.append(rep)
    report_emit(reports, out, caps={"resolution": 12, "corpus": 60}, notes=[DOMDIM_NOTE])
    if out:
        print(f"report written to {out}")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1] if len(sys.argv) > 1 else None))
