"""``alk`` command-line entry point.

Exit codes: 0 when every requested suite matches expectation, 1 on a failed or
inconclusive suite, 2 on bad input or IO errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import AlgebraError
from .ar import EnumerationClass
from .auslander import auslander_algebra
from .corpus import DEFAULT_CORPUS_CAP, build_corpus
from .homology import (
    DEFAULT_CAP,
    dominant_dimension,
    global_dimension,
    inj_dim,
    is_injective,
    is_projective,
    min_proj_resolution,
    regular,
    simples,
)
from .io import SchemaError, load_algebra
from .modspec import SpecError, parse_module
from .modules import indec_injective, indec_projective
from .report import OutputError, canonical_json, dot_export, report_emit, write_text
from . import suites as S

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(ValueError):
    pass


def _cap(args) -> int:
    if args.cap is not None:
        cap = args.cap
    else:
        raw = os.environ.get("ALK_CAP")
        try:
            cap = int(raw) if raw else DEFAULT_CAP
        except ValueError:
            raise UsageError(f"ALK_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError("cap must be at least 1")
    return cap


def _bundle(args, alg):
    if not getattr(args, "cls", None):
        return None
    return auslander_algebra(alg, EnumerationClass(args.cls, args.exponent))


def _emit(obj, out) -> None:
    text = canonical_json(obj)
    if out:
        write_text(out, text)
    sys.stdout.write(text)


def cmd_info(args) -> int:
    cap = _cap(args)
    alg = load_algebra(args.file)
    quiver = alg.presentation.quiver
    info = {
        "algebra": alg.name,
        "dim": alg.dim,
        "vertices": list(alg.vertex_labels),
        "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in quiver.arrows],
        "basis": list(alg.basis_labels),
        "radical_dim": len(alg.radical_basis),
        "cap": cap,
        "gl_dim": global_dimension(alg, cap),
        "domdim": dominant_dimension(alg, cap),
        "inj_dim_regular": inj_dim(regular(alg), cap),
        "regular_dims": list(regular(alg).dims),
        "vertices_detail": [
            {
                "vertex": v,
                "P_dims": list(indec_projective(alg, i).dims),
                "I_dims": list(indec_injective(alg, i).dims),
                "pd_simple": min_proj_resolution(simples(alg)[i], cap).length,
                "simple_projective": is_projective(simples(alg)[i]),
                "simple_injective": is_injective(simples(alg)[i]),
            }
            for i, v in enumerate(alg.vertex_labels)
        ],
    }
    _emit(info, args.report)
    return EXIT_OK


def cmd_pd(args) -> int:
    cap = _cap(args)
    alg = load_algebra(args.file)
    m = parse_module(alg, args.module)
    res = min_proj_resolution(m, cap)
    out = {
        "module": args.module,
        "dims": list(m.dims),
        "pd": res.length,
        "id": inj_dim(m, cap),
        "projective": is_projective(m) if m.dim else True,
        "injective": is_injective(m) if m.dim else True,
        "resolution_terms": [list(t.dims) for t in res.terms],
        "cap": cap,
    }
    _emit(out, args.report)
    return EXIT_OK


def cmd_auslander(args) -> int:
    cap = _cap(args)
    alg = load_algebra(args.file)
    bundle = auslander_algebra(alg, EnumerationClass(args.cls, args.exponent))
    ok, gd, dd = S.auslander_predicate(bundle.lam, cap)
    out = dict(bundle.summary(), gl_dim=gd, domdim=dd, auslander=ok, cap=cap)
    if args.dot:
        dot_export(bundle.lam.ext_quiver(), args.dot, title=bundle.lam.name)
    _emit(out, args.report)
    return EXIT_OK


def _run_suite(name: str, target, cap: int, corpus, expect_fail: bool):
    if name == "thmA":
        rep = S.suite_thmA(target, cap)
    elif name == "thmB":
        rep = S.suite_thmB(target, cap, corpus)
    elif name == "thmC":
        rep = S.suite_thmC(target, cap)
    elif name == "prop21":
        rep = S.suite_prop21(target, cap)
    elif name == "prop31":
        rep = S.suite_prop31(target, cap)
    elif name == "lemmas":
        rep = S.suite_lemmas(target, cap, corpus)
    elif name == "p1_property":
        rep = S.suite_p1_property(target, cap, corpus)
    else:
        raise UsageError(f"unknown suite {name!r}")
    rep.expect_fail = expect_fail
    return rep


def cmd_check(args) -> int:
    cap = _cap(args)
    if args.corpus_cap < 1:
        raise UsageError("corpus cap must be at least 1")
    alg = load_algebra(args.file)
    bundle = _bundle(args, alg)
    target = bundle if bundle is not None else alg
    lam = bundle.lam if bundle is not None else alg
    if args.suite == "all":
        names = list(S.SUITES) if bundle is not None else ["thmC", "lemmas", "p1_property"]
    elif args.suite in S.SUITES:
        names = [args.suite]
        if args.suite == "prop21" and bundle is None:
            raise UsageError("suite prop21 needs --class to build the endomorphism algebra")
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(S.SUITES)} or all")
    corpus = build_corpus(lam, args.corpus_cap) if {"thmB", "lemmas", "p1_property"} & set(names) else None
    reports = [_run_suite(n, target, cap, corpus, args.expect_fail) for n in names]
    caps = {"resolution": cap, "corpus": args.corpus_cap}
    text = report_emit(reports, args.report, caps=caps, notes=[S.DOMDIM_NOTE])
    if args.json:
        sys.stdout.write(text)
    else:
        for r in reports:
            tag = "ok" if r.ok else "NOT OK"
            extra = " (expected fail)" if r.expect_fail else ""
            size = f" corpus={r.corpus_size}" if r.corpus_size is not None else ""
            print(f"{r.suite:12s} {r.verdict:12s} {tag}{extra}  cases={len(r.cases)}{size}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_dot(args) -> int:
    alg = load_algebra(args.file)
    bundle = _bundle(args, alg)
    if bundle is not None:
        quiver, title = bundle.lam.ext_quiver(), bundle.lam.name
    else:
        quiver, title = alg.presentation.quiver, alg.name
    text = dot_export(quiver, args.output, title=title)
    if not args.output:
        sys.stdout.write(text)
    return EXIT_OK


def _class_args(p) -> None:
    p.add_argument("--class", dest="cls", choices=EnumerationClass.TAGS,
                   help="build the endomorphism algebra of the indecomposables of this class")
    p.add_argument("--exponent", type=int, default=None, help="Loewy truncation exponent (nakayama-linear)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alk", description="Exact homological computations for quiver algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("file", help="algebra presentation (JSON)")
        sp.add_argument("--cap", type=int, default=None, help=f"resolution cap (default ALK_CAP or {DEFAULT_CAP})")
        sp.add_argument("--report", default=None, help="also write the JSON output here")

    sp = sub.add_parser("info", help="dimensions and homological summary of an algebra")
    common(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("pd", help="projective dimension of a module")
    common(sp)
    sp.add_argument("--module", required=True, help="module spec, e.g. S:1, rad:P:2, syz:1:S:1, sum:S:1+P:2")
    sp.set_defaults(func=cmd_pd)

    sp = sub.add_parser("auslander", help="endomorphism algebra of all indecomposables")
    common(sp)
    sp.add_argument("--class", dest="cls", required=True, choices=EnumerationClass.TAGS)
    sp.add_argument("--exponent", type=int, default=None)
    sp.add_argument("--dot", default=None, help="write the quiver of the result as DOT")
    sp.set_defaults(func=cmd_auslander)

    sp = sub.add_parser("check", help="run property suites")
    sp.add_argument("suite", help=f"one of {', '.join(S.SUITES)}, or all")
    common(sp)
    _class_args(sp)
    sp.add_argument("--expect-fail", action="store_true", help="negative control: succeed only if the suite fails")
    sp.add_argument("--corpus-cap", type=int, default=DEFAULT_CORPUS_CAP)
    sp.add_argument("--json", action="store_true", help="print the full JSON report")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dot", help="DOT drawing of the quiver")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", default=None)
    _class_args(sp)
    sp.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (SchemaError, SpecError, UsageError, OutputError, AlgebraError, S.NeedsBundle) as exc:
        print(f"alk: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
