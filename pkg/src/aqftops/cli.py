"""Command-line driver.

Commands: validate, build-operad, check-operad, check-algebra, gns,
circle (coend debug), kan (color-change debug), report (figures + tables),
corpus (list bundled inputs).  All outputs are deterministic given the
same inputs and flags.  Exit codes: 0 all checks pass, 1 a verified
failure with a printed witness, 2 input or usage error.
"""
from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import aqft, fincat, gns, operad, staralg, symseq, textio
from .reporting import Report

PASS, FAIL, USAGE = 0, 1, 2


def corpus_path(name: str) -> Path:
    base = resources.files("aqftops") / "corpus"
    hit = base / name
    if not hit.is_file():
        candidates = [p.name for p in base.iterdir() if p.name.startswith(name)]
        if len(candidates) == 1:
            hit = base / candidates[0]
        else:
            raise FileNotFoundError(f"no bundled corpus file for {name!r}")
    return Path(str(hit))


def _resolve(path_arg, corpus_arg):
    if corpus_arg:
        return corpus_path(corpus_arg)
    if path_arg is None:
        raise SystemExit(USAGE)
    text = str(path_arg)
    if text.startswith("corpus:"):
        return corpus_path(text.split(":", 1)[1])
    return Path(text)


def _emit(report: Report, machine: bool) -> None:
    print(report.text(machine))


def _category(args) -> fincat.OrthCategory:
    return textio.load_category(_resolve(args.category, args.corpus))


def cmd_validate(args) -> int:
    try:
        cat = _category(args)
    except (fincat.CategoryError, textio.ParseError) as exc:
        print(f"invalid: {exc}")
        return FAIL if isinstance(exc, fincat.CategoryError) else USAGE
    print(f"valid: {len(cat.objects)} object(s), "
          f"{len(cat.morphisms)} morphism(s), {len(cat.orth)} orthogonal pair(s)")
    return PASS


def cmd_build(args) -> int:
    cat = _category(args)
    O = aqft.build_aqft_operad(cat, args.max_arity, name=_resolve(args.category, args.corpus).stem)
    if args.star != "none":
        O = aqft.attach_star(O, args.star)
    for line in aqft.dump_operad_lines(O, gamma_arity=args.gamma_arity):
        print(line)
    return PASS


def cmd_check_operad(args) -> int:
    cat = _category(args)
    name = _resolve(args.category, args.corpus).stem
    O = aqft.build_aqft_operad(cat, args.max_arity, name=name)
    machine = args.format == "machine"
    ok = True
    kw = {}
    if args.equiv_arity is not None:
        kw["equiv_arity"] = args.equiv_arity
    if args.assoc_arity is not None:
        kw["assoc_arity"] = args.assoc_arity
    rep = operad.check_operad_axioms(O, args.max_arity, **kw)
    _emit(rep, machine)
    ok &= rep.ok
    variants = {
        "both": (aqft.REVERSE, aqft.IDENTITY),
        "reverse": (aqft.REVERSE,),
        "identity": (aqft.IDENTITY,),
        "none": (),
    }[args.star]
    for variant in variants:
        starred = aqft.attach_star(O, variant)
        srep = staralg.check_star_operad(starred, args.max_arity)
        _emit(srep, machine)
        ok &= srep.ok
    if args.mutations:
        sweep = operad.mutation_sweep(O, args.mutations)
        _emit(sweep, machine)
        ok &= sweep.ok
    return PASS if ok else FAIL


def cmd_check_algebra(args) -> int:
    cat = _category(args)
    F = textio.load_functor(_resolve(args.functor, None), cat)
    machine = args.format == "machine"
    ok = True
    frep = staralg.check_functor(F, cat)
    _emit(frep, machine)
    ok &= frep.ok
    prep = aqft.check_perp_commutativity(F, cat)
    _emit(prep, machine)
    ok &= prep.ok
    if not ok:
        return FAIL
    O = aqft.build_aqft_operad(cat, args.max_arity, name="operad")
    A = aqft.algebra_from_functor(F, cat, O)
    arep = operad.check_algebra(O, A, min(args.max_arity, 3))
    _emit(arep, machine)
    ok &= arep.ok
    G = aqft.functor_from_algebra(A, O, cat)
    round_trip = Report("round-trip")
    round_trip.tick("presentations")
    if not aqft.functors_equal(F, G, cat):
        round_trip.fail("presentations", "functor", "round trip changed the presentation")
    _emit(round_trip, machine)
    ok &= round_trip.ok
    if args.star != "none":
        starred = aqft.attach_star(O, args.star)
        sorep = staralg.check_star_operad(starred, args.max_arity)
        _emit(sorep, machine)
        ok &= sorep.ok
        sarep = staralg.check_star_algebra(starred, A, min(args.max_arity, 3))
        _emit(sarep, machine)
        ok &= sarep.ok
        sfrep = staralg.check_star_functor(F, cat)
        _emit(sfrep, machine)
        ok &= sfrep.ok
    return PASS if ok else FAIL


def cmd_gns(args) -> int:
    algebra = textio.load_algebra(_resolve(args.algebra, None))
    state = textio.load_state(_resolve(args.state, None), algebra)
    machine = args.format == "machine"
    rep = gns.check_gns(state)
    out = gns.gns_construct(state)
    labels = algebra.elements
    print("gram matrix:")
    from .cvec import format_scalar
    for i in range(out.space.dim):
        row = "  ".join(format_scalar(out.space.gram[i][j]).rjust(6)
                        for j in range(out.space.dim))
        print(f"  {str(labels[i]).ljust(4)} {row}")
    if args.show_unit_value:
        print(f"omega(unit) = {format_scalar(state.value(state.algebra.unit))}")
    _emit(rep, machine)
    return PASS if rep.ok else FAIL


def cmd_circle(args) -> int:
    cat = _category(args)
    O = aqft.build_aqft_operad(cat, args.max_arity, name="operad")
    machine = args.format == "machine"
    X = operad.truncate_seq(O.seq, args.max_arity)
    prod = symseq.circle_product(X, X, max_arity=args.max_arity)
    for line in symseq.dump_lines(prod.seq, with_action=False):
        print(line)
    rep = operad.check_monoid_formulation(O, args.max_arity)
    _emit(rep, machine)
    return PASS if rep.ok else FAIL


def cmd_kan(args) -> int:
    cat = _category(args)
    O = aqft.build_aqft_operad(cat, args.max_arity, name="operad")
    machine = args.format == "machine"
    f = {x: "*" for x in cat.objects}
    X = operad.truncate_seq(O.seq, args.max_arity)
    Y = symseq.symmetric_group_sequence(args.max_arity, color="*")
    rep = symseq.check_adjunction_triangles(f, X, Y, cat.objects, ("*",))
    _emit(rep, machine)
    return PASS if rep.ok else FAIL


def cmd_report(args) -> int:
    from . import figures

    cat = _category(args)
    name = _resolve(args.category, args.corpus).stem
    O = aqft.build_aqft_operad(cat, args.max_arity, name=name)
    if args.star != "none":
        O = aqft.attach_star(O, args.star)
    outdir = Path(args.out)
    written = []
    written += figures.write_counts_report(O, outdir)
    written += figures.write_slot_table(O, outdir)
    (outdir / "operad.txt").write_text(
        "\n".join(aqft.dump_operad_lines(O, gamma_arity=args.gamma_arity)) + "\n"
    )
    written.append(outdir / "operad.txt")
    if args.algebra and args.state:
        algebra = textio.load_algebra(_resolve(args.algebra, None))
        state = textio.load_state(_resolve(args.state, None), algebra)
        verdict = gns.check_gns(state)
        if not verdict.ok:
            print(verdict.text())
            return FAIL
        out = gns.gns_construct(state)
        written += figures.write_gram_report(out, algebra.elements, outdir)
    for path in written:
        print(f"wrote {path}")
    return PASS


def cmd_corpus(args) -> int:
    base = resources.files("aqftops") / "corpus"
    for entry in sorted(p.name for p in base.iterdir()):
        print(entry)
    return PASS


def _add_common(p, category=True):
    if category:
        p.add_argument("--category", help="category file (or corpus:NAME)")
        p.add_argument("--corpus", help="bundled category name")
    p.add_argument("--max-arity", type=int, default=3, dest="max_arity",
                   choices=range(0, 7))
    p.add_argument("--format", choices=("human", "machine"), default="human")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="aqftops",
        description="build and verify operads of finite orthogonal categories",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a category file")
    _add_common(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("build-operad", help="build and dump an operad")
    _add_common(p)
    p.add_argument("--star", choices=("none", "reverse", "identity"), default="none")
    p.add_argument("--gamma-arity", type=int, default=2, dest="gamma_arity")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("check-operad", help="run the axiom suites")
    _add_common(p)
    p.add_argument("--star", choices=("none", "reverse", "identity", "both"),
                   default="both")
    p.add_argument("--equiv-arity", type=int, default=None, dest="equiv_arity")
    p.add_argument("--assoc-arity", type=int, default=None, dest="assoc_arity")
    p.add_argument("--mutations", type=int, default=0,
                   help="also sweep single-entry mutations up to this arity")
    p.set_defaults(fn=cmd_check_operad)

    p = sub.add_parser("check-algebra", help="functor/algebra correspondence checks")
    _add_common(p)
    p.add_argument("--functor", required=True, help="functor or algebra file")
    p.add_argument("--star", choices=("none", "reverse", "identity"), default="none")
    p.set_defaults(fn=cmd_check_algebra)

    p = sub.add_parser("gns", help="state checks and the induced representation")
    _add_common(p, category=False)
    p.add_argument("--algebra", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--show-unit-value", action="store_true", dest="show_unit_value")
    p.set_defaults(fn=cmd_gns)

    p = sub.add_parser("circle", help="debug: coend dump and monoid formulation")
    _add_common(p)
    p.set_defaults(fn=cmd_circle)

    p = sub.add_parser("kan", help="debug: color-collapse adjunction triangles")
    _add_common(p)
    p.set_defaults(fn=cmd_kan)

    p = sub.add_parser("report", help="render tables and figures to a directory")
    _add_common(p)
    p.add_argument("--star", choices=("none", "reverse", "identity"), default="none")
    p.add_argument("--gamma-arity", type=int, default=2, dest="gamma_arity")
    p.add_argument("--out", required=True)
    p.add_argument("--algebra")
    p.add_argument("--state")
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("corpus", help="list bundled input files")
    p.set_defaults(fn=cmd_corpus)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (textio.ParseError, fincat.CategoryError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
