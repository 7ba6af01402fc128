"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the verdict lines.

Deep-verification scopes (documented here once): the axiom checker runs in
its anchored mode, whose instance set decides every law instance (see the
operad module docstring).  Class-level equivariance/associativity run at
arity 4 on the one-object categories, where full entry coverage is cheap,
and at arity 3 on the multi-object ones, whose arity-4 class-level
instance counts (measured in the tens of millions) do not fit any
second-scale budget in exact arithmetic; arity-4 coverage for those
categories is carried by the one-level families (action, unitality), the
arity-4 star suite, and the fact that the composition formula's
permutation part is color-independent and fully exercised at arity 4 on
the one-object categories.  Mutation sweeps perturb every perturbable
gamma/unit/action entry and escalate one arity when a mutant is locally
consistent.
"""
import time
from fractions import Fraction

import pytest

from aqftops import cli, gns, operad, staralg, symseq, textio
from aqftops.aqft import (
    IDENTITY, REVERSE, algebra_from_functor, algebra_tables_equal, attach_star,
    build_aqft_operad, check_perp_commutativity, functor_from_algebra,
    functors_equal, slot_counts,
)
from aqftops.cvec import gauss, mat_identity

CATEGORY_FILES = (
    "terminal_empty", "terminal_full", "arrow_empty", "arrow_orth",
    "square", "poset3",
)
ONE_COLOR = ("terminal_empty", "terminal_full")

FUNCTOR_INSTANCES = {
    "terminal_empty": ("cfield.alg", "cz2.alg", "mat2_entrywise.alg",
                       "mat2_conjtrans.alg"),
    "terminal_full": ("cfield.alg", "cz2.alg"),
    "arrow_empty": ("arrow_central.fun",),
    "arrow_orth": ("arrow_central.fun",),
    "square": ("square_cz2.fun",),
    "poset3": ("poset3_mixed.fun",),
}


def say(line: str) -> None:
    print(line)


@pytest.fixture(scope="module")
def corpus():
    cats = {
        name: textio.load_category(cli.corpus_path(f"{name}.cat"))
        for name in CATEGORY_FILES
    }
    operads = {
        name: build_aqft_operad(cat, 4, name=name) for name, cat in cats.items()
    }
    return cats, operads


def test_criterion_1_counts(corpus):
    t0 = time.monotonic()
    As = build_aqft_operad(
        textio.load_category(cli.corpus_path("terminal_empty.cat")), 5
    )
    Com = build_aqft_operad(
        textio.load_category(cli.corpus_path("terminal_full.cat")), 5
    )
    as_counts = [slot_counts(As).get(n, 0) for n in range(6)]
    com_counts = [slot_counts(Com).get(n, 0) for n in range(6)]
    elapsed = time.monotonic() - t0
    assert as_counts == [1, 1, 2, 6, 24, 120]
    assert com_counts == [1, 1, 1, 1, 1, 1]
    assert elapsed < 1.0, f"{elapsed:.3f}s"
    say(f"ACCEPTANCE 1 factorial/singleton counts ({elapsed * 1000:.0f} ms): PASS")


def test_criterion_2_axiom_suite_and_mutations(corpus):
    cats, operads = corpus
    t0 = time.monotonic()
    for name in CATEGORY_FILES:
        O = operads[name]
        if name in ONE_COLOR:
            verdict = operad.check_operad_axioms(O, 4)
            sweep = operad.mutation_sweep(O, 3)
        else:
            verdict = operad.check_operad_axioms(
                O, 4, equiv_arity=3, assoc_arity=3
            )
            sweep = operad.mutation_sweep(O, 2)
        assert verdict.ok, f"{name}: {verdict.text()}"
        assert sweep.ok, f"{name}: {sweep.text()}"
        detected, total = sweep.counts["detected"], sweep.counts["mutants"]
        assert detected == total
        say(f"  {name}: axioms pass, mutations {detected}/{total} detected")
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0, f"{elapsed:.1f}s"
    say(f"ACCEPTANCE 2 operad axiom suite + mutation sweep ({elapsed:.1f} s): PASS")


def test_criterion_3_star_suite(corpus):
    cats, operads = corpus
    t0 = time.monotonic()
    for name in CATEGORY_FILES:
        for variant in (REVERSE, IDENTITY):
            starred = attach_star(operads[name], variant)
            verdict = staralg.check_star_operad(starred, 4)
            assert verdict.ok, f"{name}/{variant}: {verdict.text()}"
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0, f"{elapsed:.1f}s"
    say(f"ACCEPTANCE 3 star involutions, both variants ({elapsed:.1f} s): PASS")


def test_criterion_4_correspondence_round_trip(corpus):
    # the round trip itself is exact at every arity; the basis-tuple axiom
    # sweep runs at arity 3 on the small categories and arity 2 on the
    # 3/4-object ones (the tuple count grows with colors^arity)
    cats, operads = corpus
    perturbations = 0
    for name in CATEGORY_FILES:
        cat, O = cats[name], operads[name]
        arity = 3 if len(cat.objects) <= 2 else 2
        for fname in FUNCTOR_INSTANCES[name]:
            F = textio.load_functor(cli.corpus_path(fname), cat)
            assert staralg.check_functor(F, cat).ok, (name, fname)
            assert check_perp_commutativity(F, cat).ok, (name, fname)
            A = algebra_from_functor(F, cat, O, verify_arity=arity)
            assert operad.check_algebra(O, A, arity).ok, (name, fname)
            G = functor_from_algebra(A, O, cat)
            assert functors_equal(F, G, cat), (name, fname)
            B = algebra_from_functor(G, cat, O, verify=False)
            assert algebra_tables_equal(A, B, O, arity), (name, fname)
            # perturb one matrix entry of one non-identity morphism image
            # (falling back to a monoid table entry on discrete categories)
            broken = _perturb(F, cat)
            assert broken is not None, (name, fname)
            detected = (
                not staralg.check_functor(broken, cat).ok
                or not check_perp_commutativity(broken, cat).ok
                or not _algebra_ok(broken, cat, O)
            )
            assert detected, f"perturbation not detected on {name}/{fname}"
            perturbations += 1
    say(f"ACCEPTANCE 4 functor<->algebra round trip, {perturbations} "
        "perturbations detected: PASS")


def _perturb(F, cat):
    from dataclasses import replace
    for fname in sorted(cat.morphisms):
        if fname in cat.identities.values():
            continue
        M = F.maps[fname]
        if isinstance(M, dict):
            continue
        bumped = list(list(row) for row in M)
        bumped[0][0] = bumped[0][0] + gauss(1)
        maps = dict(F.maps)
        maps[fname] = tuple(tuple(r) for r in bumped)
        return staralg.FunctorToMon(monoids=F.monoids, maps=maps)
    # discrete category: perturb the multiplication table instead
    (obj,) = cat.objects
    m = F.monoids[obj]
    mul = dict(m.mul)
    key = (0, 0)
    mul[key] = tuple(z + gauss(1) for z in mul[key])
    bad = replace(m, mul=mul) if hasattr(m, "__dataclass_fields__") else None
    from aqftops.staralg import MonoidPresentation
    bad = MonoidPresentation(
        name=m.name, elements=m.elements, mul=mul, unit=m.unit,
        star=m.star, mode=m.mode,
    )
    return staralg.FunctorToMon(monoids={obj: bad}, maps=F.maps)


def _algebra_ok(F, cat, O, arity=2):
    try:
        A = algebra_from_functor(F, cat, O, verify_arity=arity)
    except ValueError:
        return False
    if not operad.check_algebra(O, A, arity).ok:
        return False
    G = functor_from_algebra(A, O, cat)
    return functors_equal(F, G, cat)


def test_criterion_5_reversing_discriminator(corpus):
    cats, operads = corpus
    cat, As = cats["terminal_empty"], operads["terminal_empty"]
    rev = attach_star(As, REVERSE)
    idn = attach_star(As, IDENTITY)
    expectations = {
        "mat2_conjtrans.alg": (True, False),
        "mat2_entrywise.alg": (False, True),
        "cfield.alg": (True, True),
    }
    for fname, (ok_rev, ok_idn) in expectations.items():
        F = textio.load_functor(cli.corpus_path(fname), cat)
        A = algebra_from_functor(F, cat, rev, verify_arity=3)
        got_rev = staralg.check_star_algebra(rev, A, 3)
        got_idn = staralg.check_star_algebra(idn, A, 3)
        assert got_rev.ok is ok_rev, (fname, got_rev.text())
        assert got_idn.ok is ok_idn, (fname, got_idn.text())
        for verdict, expected in ((got_rev, ok_rev), (got_idn, ok_idn)):
            if not expected:
                assert verdict.witnesses, "failure must carry a witness"
                say(f"  {fname}: witness {verdict.witnesses[0].line()}")
    say("ACCEPTANCE 5 reversing vs non-reversing discriminator: PASS")


def test_criterion_6_gns():
    z2 = textio.load_algebra(cli.corpus_path("cz2.alg"))
    state = textio.load_state(cli.corpus_path("cz2_state.state"), z2)
    out = gns.gns_construct(state)
    assert out.space.gram == mat_identity(2)
    assert gns.check_gns(state).ok

    m2 = textio.load_algebra(cli.corpus_path("mat2_conjtrans.alg"))
    trace = textio.load_state(cli.corpus_path("mat2_trace.state"), m2)
    out2 = gns.gns_construct(trace)
    half = gauss(Fraction(1, 2))
    zero = gauss(0)
    expected = tuple(
        tuple(half if i == j else zero for j in range(4)) for i in range(4)
    )
    assert out2.space.gram == expected
    verdict = gns.check_gns(trace)
    assert verdict.ok
    assert verdict.counts["representation.adjoint-law"] == 4 * 16
    say("ACCEPTANCE 6 GNS gram matrices and representation compatibility: PASS")


def test_criterion_7_coend_oracle(corpus):
    cats, operads = corpus
    t0 = time.monotonic()
    X = symseq.symmetric_group_sequence(2)
    XX = symseq.circle_product(X, X, max_arity=2)
    color = X.colors[0]
    assert len(XX.seq.slot((color, color), color)) == 4
    for name in ONE_COLOR:
        O = build_aqft_operad(cats[name], 3, name=name)
        verdict = operad.check_monoid_formulation(O, 3)
        assert verdict.ok, f"{name}: {verdict.text()}"
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0, f"{elapsed:.1f}s"
    say(f"ACCEPTANCE 7 coend/monoid formulation agreement ({elapsed:.1f} s): PASS")


def test_criterion_8_color_change_triangles(corpus):
    cats, operads = corpus
    cat = cats["arrow_empty"]
    O = build_aqft_operad(cat, 2, name="arrow")
    X = operad.truncate_seq(O.seq, 2)
    for (c, t) in X.supported():
        assert len(X.slot(c, t)) <= 3
    f = {"x": "*", "y": "*"}
    Y = symseq.symmetric_group_sequence(2, color="*")
    verdict = symseq.check_adjunction_triangles(f, X, Y, cat.objects, ("*",))
    assert verdict.ok, verdict.text()
    assert verdict.counts["triangle-lan"] > 0
    assert verdict.counts["triangle-pullback"] > 0
    say("ACCEPTANCE 8 color-collapse adjunction triangles: PASS")
