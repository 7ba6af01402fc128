"""Colored operads in component form, axiom checkers, and algebras.

A component operad stores per-slot operation sets (a symmetric sequence),
a composition ``gamma`` defined on composable shapes, one unit per color,
and optionally a star (a self-map of every slot).

Axiom checking comes in two modes.

- ``full``: every law instance up to the arity bound is evaluated directly.
  Exhaustive but exponential; practical only for small instances.
- ``anchored`` (default): the action is verified functorial on Coxeter
  generators (which forces functoriality for the whole group), outer
  equivariance is verified at orbit-representative outer elements against
  *all* group elements and *all* inner tuples, inner equivariance at the
  same anchors for single-position generators, and associativity at shapes
  whose constituents are all orbit representatives.  Because the transport
  permutations composing two law instances satisfy purely combinatorial
  identities (independent of the operad data), the anchored instances
  imply the laws at every shape; and every stored gamma/action/unit entry
  is read by at least one anchored instance, so any single corrupted entry
  falsifies some checked identity.  The mutation sweep below exercises that
  detection property empirically.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from . import perm
from .cvec import (
    Vector, basis_vector, mat_vec, vec_add, vec_conj, vec_scale, vec_zero,
)
from .fincat import Profile
from .reporting import Report
from .symseq import SymSeqSet, circle_product, circle_unit


class ArityCapError(RuntimeError):
    """Composition asked for a result arity beyond the stored support."""


@dataclass
class ComponentOperad:
    """Per-profile operation sets with composition, units, optional star."""

    name: str
    seq: SymSeqSet
    units: dict                    # color -> element of slot ((t,), t)
    gamma_fn: Callable             # (a, t, x, inners) -> element
    star: dict | None = None       # (profile, target) -> {elem: elem}
    max_arity: int = 3
    aux: object = None             # construction-specific bookkeeping

    @property
    def colors(self):
        return self.seq.colors

    def gamma(self, a: Profile, t, x, inners: Sequence) -> object:
        """Composite of x with the inner operations.

        ``inners`` is a sequence of (profile, element) pairs, entry i living
        at target color a[i]; the result sits at the concatenated profile.
        Raises ArityCapError when the result arity exceeds the stored bound
        (enforced by the underlying composition function).
        """
        return self.gamma_fn(a, t, x, tuple(inners))

    def star_of(self, c: Profile, t, e):
        return self.star[(c, t)][e]

    def with_gamma_override(self, shape, value) -> "ComponentOperad":
        a0, t0, x0, inners0 = shape

        def fn(a, t, x, inners):
            if (a, t, x, inners) == (a0, t0, x0, inners0):
                return value
            return self.gamma_fn(a, t, x, inners)

        return replace(self, name=f"{self.name}[gamma-mutant]", gamma_fn=fn)

    def with_action_swap(self, slot, sigma, e1, e2) -> "ComponentOperad":
        """Swap the sigma-images of e1 and e2 in one slot (stays bijective)."""
        c0, t0 = slot
        base = self.seq

        def act(c, t, e, s):
            if (c, t) == (c0, t0) and s == sigma and e in (e1, e2):
                return base.act(c, t, e2 if e == e1 else e1, s)
            return base.act(c, t, e, s)

        seq = SymSeqSet(base.colors, {k: base.slot(*k) for k in base.supported()}, act)
        return replace(self, name=f"{self.name}[action-mutant]", seq=seq)

    def with_unit(self, t, value) -> "ComponentOperad":
        units = dict(self.units)
        units[t] = value
        return replace(self, name=f"{self.name}[unit-mutant]", units=units)


def truncate_seq(seq: SymSeqSet, max_arity: int, min_arity: int = 0) -> SymSeqSet:
    slots = {
        (c, t): seq.slot(c, t)
        for (c, t) in seq.supported()
        if min_arity <= len(c) <= max_arity
    }
    return SymSeqSet(seq.colors, slots, seq._act)


# --- orbit bookkeeping -------------------------------------------------------

def slot_orbits(seq: SymSeqSet, max_arity: int):
    """Orbit representatives of the slot action, arity <= max_arity.

    Returns (reps, rep_of) where reps is a set of (slot, elem) pairs and
    rep_of maps every (slot, elem) to its representative, the member least
    under (profile length, profile, position-in-slot).
    """
    def key(item):
        (c, t), e = item
        return (len(c), c, t, seq.index(c, t, e))

    rep_of: dict = {}
    reps = set()
    for slot in seq.supported():
        c, t = slot
        if len(c) > max_arity:
            continue
        for e in seq.slot(c, t):
            if (slot, e) in rep_of:
                continue
            orbit = [(slot, e)]
            seen = {(slot, e)}
            queue = [(slot, e)]
            while queue:
                (cc, tt), el = queue.pop()
                for s in perm.adjacent_transpositions(len(cc)):
                    c2 = perm.act_right(cc, s)
                    el2 = seq.act(cc, tt, el, s)
                    item = ((c2, tt), el2)
                    if item not in seen:
                        seen.add(item)
                        orbit.append(item)
                        queue.append(item)
            rep = min(orbit, key=key)
            reps.add(rep)
            for item in orbit:
                rep_of[item] = rep
    return reps, rep_of


def _slots_by_target(seq: SymSeqSet, max_arity: int) -> dict:
    out: dict = {t: [] for t in seq.colors}
    for (b, t) in seq.supported():
        if len(b) <= max_arity:
            out[t].append(b)
    return out


def _inner_profile_combos(by_target: dict, a: Profile, budget: int):
    """All tuples (b_1, ..., b_m) of supported profiles with targets a_i
    and total length <= budget, in deterministic order."""
    if not a:
        yield ()
        return
    head = a[0]
    for b in by_target.get(head, ()):
        room = budget - len(b)
        if room < 0:
            continue
        for rest in _inner_profile_combos(by_target, a[1:], room):
            yield (b,) + rest


def gamma_shapes(O: ComponentOperad, max_arity: int,
                 outer_reps: set | None = None,
                 inner_reps: set | None = None):
    """Composable shapes (a, t, x, inners) with result arity <= max_arity.

    Outer profiles of length 0 compose with nothing and are skipped.
    ``outer_reps`` / ``inner_reps`` restrict the outer / inner elements to
    orbit representatives.
    """
    seq = O.seq
    by_target = _slots_by_target(seq, max_arity)
    for (a, t) in seq.supported():
        m = len(a)
        if m == 0 or m > max_arity:
            continue
        xs = seq.slot(a, t)
        if outer_reps is not None:
            xs = [x for x in xs if ((a, t), x) in outer_reps]
        if not xs:
            continue
        for bs in _inner_profile_combos(by_target, a, max_arity):
            pools = []
            for i, b in enumerate(bs):
                ys = seq.slot(b, a[i])
                if inner_reps is not None:
                    ys = [y for y in ys if ((b, a[i]), y) in inner_reps]
                pools.append([(b, y) for y in ys])
            if any(not p for p in pools):
                continue
            for x in xs:
                for inners in product(*pools):
                    yield (a, t, x, inners)


# --- the axiom checker -------------------------------------------------------

def check_operad_axioms(O: ComponentOperad, max_arity: int,
                        mode: str = "anchored",
                        fail_fast: bool = False,
                        assoc_arity: int | None = None,
                        equiv_arity: int | None = None) -> Report:
    """Action functoriality, unitality, equivariance, associativity.

    See the module docstring for what each mode evaluates and why the
    anchored mode decides the laws at every shape.  The one-level families
    (action, unitality) always run to ``max_arity``; ``equiv_arity`` and
    ``assoc_arity`` bound the equivariance reads and the two-level
    associativity trees separately (those grow multiplicatively with the
    number of colors) and default to ``max_arity``.
    """
    if mode not in ("anchored", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    if assoc_arity is None:
        assoc_arity = max_arity
    if equiv_arity is None:
        equiv_arity = max_arity
    rep = Report(f"operad-axioms[{O.name}]")
    seq = O.seq
    anchored = mode == "anchored"

    def bail() -> bool:
        return fail_fast and not rep.ok

    # families of permutations used per degree
    def outer_perms(n):
        return perm.all_perms(n)

    def action_pairs(n):
        gens = perm.adjacent_transpositions(n)
        alls = perm.all_perms(n)
        if anchored:
            return [(s, q) for s in gens for q in alls]
        return [(s, q) for s in alls for q in alls]

    # (1) action: identity, functoriality, bijectivity
    for (c, t) in seq.supported():
        n = len(c)
        if n > max_arity:
            continue
        elems = seq.slot(c, t)
        ident = perm.identity(n)
        for e in elems:
            rep.tick("action-identity")
            if seq.act(c, t, e, ident) != e:
                rep.fail("action-identity", f"{t}<-{c}", f"{e} moves under the identity")
                if bail():
                    return rep
        for s in perm.adjacent_transpositions(n):
            c2 = perm.act_right(c, s)
            images = [seq.act(c, t, e, s) for e in elems]
            rep.tick("action-bijective")
            target = seq.slot(c2, t)
            if len(set(images)) != len(elems) or any(i not in target for i in images):
                rep.fail("action-bijective", f"{t}<-{c} sigma={s}", "not a bijection onto the target slot")
                if bail():
                    return rep
        for (s, q) in action_pairs(n):
            c2 = perm.act_right(c, s)
            sq = perm.compose(s, q)
            for e in elems:
                rep.tick("action-functorial")
                if seq.act(c2, t, seq.act(c, t, e, s), q) != seq.act(c, t, e, sq):
                    rep.fail(
                        "action-functorial", f"{t}<-{c} ({s}, {q})",
                        f"composite disagrees at {e}",
                    )
                    if bail():
                        return rep

    # (2) unitality
    for (c, t) in seq.supported():
        if len(c) > max_arity:
            continue
        for o in seq.slot(c, t):
            rep.tick("unitality", 2)
            left = O.gamma((t,), t, O.units[t], ((c, o),))
            if left != o:
                rep.fail("unitality", f"{t}<-{c}", f"unit then {o} gives {left}")
                if bail():
                    return rep
            right = O.gamma(c, t, o, tuple(((x,), O.units[x]) for x in c))
            if right != o:
                rep.fail("unitality", f"{t}<-{c}", f"{o} then units gives {right}")
                if bail():
                    return rep

    reps, _ = slot_orbits(seq, max_arity) if anchored else (None, None)

    # (3) equivariance
    gamma = O.gamma
    act = seq.act
    act_right = perm.act_right
    profile_cache: dict = {}
    bsum_cache: dict = {}
    n_outer = n_inner = 0
    for (a, t, x, inners) in gamma_shapes(O, equiv_arity, outer_reps=reps):
        m = len(a)
        bs = tuple(b for b, _ in inners)
        lengths = tuple(len(b) for b in bs)
        concat = sum(bs, ())
        base = gamma(a, t, x, inners)
        for s in outer_perms(m):
            n_outer += 1
            akey = (a, s)
            a2 = profile_cache.get(akey)
            if a2 is None:
                a2 = act_right(a, s)
                profile_cache[akey] = a2
            lhs = gamma(a2, t, act(a, t, x, s), act_right(inners, s))
            bp = perm.block_permutation(s, lengths)
            rhs = act(concat, t, base, bp)
            if lhs != rhs:
                rep.fail(
                    "equivariance-outer",
                    f"{t}<-{a} x={x} sigma={s}",
                    f"{lhs} != {rhs}",
                )
                if bail():
                    rep.tick("equivariance-outer", n_outer)
                    return rep
        for i, (b, y) in enumerate(inners):
            k = len(b)
            taus = perm.adjacent_transpositions(k) if anchored else perm.all_perms(k)
            for tau in taus:
                n_inner += 1
                new_inners = list(inners)
                new_inners[i] = (act_right(b, tau), act(b, a[i], y, tau))
                lhs = gamma(a, t, x, tuple(new_inners))
                bskey = (lengths, i, tau)
                bsum = bsum_cache.get(bskey)
                if bsum is None:
                    bsum = perm.block_sum(
                        [tau if j == i else perm.identity(lengths[j])
                         for j in range(m)]
                    )
                    bsum_cache[bskey] = bsum
                rhs = act(concat, t, base, bsum)
                if lhs != rhs:
                    rep.fail(
                        "equivariance-inner",
                        f"{t}<-{a} x={x} pos={i} tau={tau}",
                        f"{lhs} != {rhs}",
                    )
                    if bail():
                        rep.tick("equivariance-inner", n_inner)
                        return rep
    rep.tick("equivariance-outer", n_outer)
    rep.tick("equivariance-inner", n_inner)

    # (4) associativity
    truncated = False
    by_target = _slots_by_target(seq, assoc_arity)

    def z_combos_by_arity(b):
        """Inner-argument tuples (with flattened profile) for one middle
        operation, keyed by total arity."""
        out: dict = {}
        for cs in _inner_profile_combos(by_target, b, assoc_arity):
            zpools = []
            for j, cprof in enumerate(cs):
                zs = seq.slot(cprof, b[j])
                if reps is not None:
                    zs = [z for z in zs if ((cprof, b[j]), z) in reps]
                zpools.append([(cprof, z) for z in zs])
            if any(not p for p in zpools):
                continue
            total = sum(len(c) for c in cs)
            d_prof = sum(cs, ())
            out.setdefault(total, []).extend(
                (combo, d_prof) for combo in product(*zpools)
            )
        return out

    def budgeted_choices(pool_maps, budget):
        """Cartesian product of per-middle combos with total arity <= budget."""
        if not pool_maps:
            yield ()
            return
        head = pool_maps[0]
        rest_maps = pool_maps[1:]
        for arity, combos in head.items():
            if arity > budget:
                continue
            room = budget - arity
            for combo in combos:
                for rest in budgeted_choices(rest_maps, room):
                    yield (combo,) + rest

    zpool_cache: dict = {}
    vi_cache: dict = {}
    gamma = O.gamma
    n_assoc = 0
    for (a, t, x, inners) in gamma_shapes(
        O, assoc_arity, outer_reps=reps, inner_reps=reps
    ):
        bs = tuple(b for b, _ in inners)
        middle = sum(bs, ())
        if len(middle) > assoc_arity:
            truncated = True
            continue
        w = gamma(a, t, x, inners)
        pool_maps = []
        for (b, _y) in inners:
            if b not in zpool_cache:
                zpool_cache[b] = z_combos_by_arity(b)
            pool_maps.append(zpool_cache[b])
        for z_choice in budgeted_choices(pool_maps, assoc_arity):
            flat: list = []
            vs: list = []
            for i, (combo, d_prof) in enumerate(z_choice):
                flat.extend(combo)
                b_i, y_i = inners[i]
                vkey = (b_i, a[i], y_i, combo)
                vi = vi_cache.get(vkey)
                if vi is None:
                    vi = gamma(b_i, a[i], y_i, combo)
                    vi_cache[vkey] = vi
                vs.append((d_prof, vi))
            n_assoc += 1
            lhs = gamma(middle, t, w, tuple(flat))
            rhs = gamma(a, t, x, tuple(vs))
            if lhs != rhs:
                rep.fail(
                    "associativity",
                    f"{t}<-{a} x={x}",
                    f"two-stage {rhs} != one-stage {lhs}",
                )
                if bail():
                    rep.tick("associativity", n_assoc)
                    return rep
    rep.tick("associativity", n_assoc)
    if truncated:
        rep.note(
            f"associativity restricted to middle arity <= {assoc_arity} (stored bound)"
        )
    rep.note(f"mode={mode} equiv_arity={equiv_arity} assoc_arity={assoc_arity}")
    return rep


# --- mutation sweep ----------------------------------------------------------

def enumerate_mutants(O: ComponentOperad, sweep_arity: int):
    """One deterministic perturbation per gamma/unit/action entry.

    Yields (description, mutated operad); entries whose slot leaves no
    alternative value admit no perturbation and are skipped.
    """
    seq = O.seq
    for (a, t, x, inners) in gamma_shapes(O, sweep_arity):
        bs = tuple(b for b, _ in inners)
        result_slot = (sum(bs, ()), t)
        pool = seq.slot(*result_slot)
        if len(pool) < 2:
            continue
        current = O.gamma(a, t, x, inners)
        alt = pool[(pool.index(current) + 1) % len(pool)]
        yield (f"gamma {t}<-{a} x={x} inners={inners}",
               O.with_gamma_override((a, t, x, inners), alt))
    for t in sorted(O.units):
        pool = seq.slot((t,), t)
        if len(pool) < 2:
            continue
        alt = pool[(pool.index(O.units[t]) + 1) % len(pool)]
        yield (f"unit {t}", O.with_unit(t, alt))
    for (c, t) in seq.supported():
        n = len(c)
        if n > sweep_arity:
            continue
        elems = seq.slot(c, t)
        if len(elems) < 2:
            continue
        for s in perm.all_perms(n):
            if s == perm.identity(n):
                continue
            for idx in range(len(elems)):
                e1, e2 = elems[idx], elems[(idx + 1) % len(elems)]
                yield (f"action {t}<-{c} sigma={s} swap({e1},{e2})",
                       O.with_action_swap((c, t), s, e1, e2))


def mutation_sweep(O: ComponentOperad, sweep_arity: int,
                   check_arities: Sequence[int] | None = None,
                   extra_checks: Iterable[Callable] = ()) -> Report:
    """Perturb each table entry once; every mutant must fail some check.

    A perturbation can be consistent within a small arity window (a
    trivialized slot action only becomes incoherent once composition mixes
    it with larger slots), so mutants surviving one check arity are
    escalated to the next before being declared undetected.
    """
    if check_arities is None:
        check_arities = (sweep_arity, sweep_arity + 1)
    rep = Report(f"mutation-sweep[{O.name}]")
    total = detected = 0
    for desc, mutant in enumerate_mutants(O, sweep_arity):
        total += 1
        caught = False
        for arity in check_arities:
            if arity > O.max_arity:
                break
            if not check_operad_axioms(mutant, arity, fail_fast=True).ok:
                caught = True
                break
        if not caught:
            caught = any(not chk(mutant).ok for chk in extra_checks)
        if caught:
            detected += 1
        else:
            rep.fail("detection", desc, "mutant passed every check")
    rep.tick("mutants", total)
    rep.tick("detected", detected)
    return rep


# --- algebras over a component operad ---------------------------------------

@dataclass
class AlgebraPresentation:
    """Carrier per color plus one structure map per operation class.

    Set mode: carriers are element tuples and ``structure(slot, o, args)``
    takes/returns elements.  Vector mode: carriers are dimensions, args are
    basis index tuples, and the structure map returns coefficient vectors;
    multilinearity extends it to arbitrary vectors (``evaluate``).
    """

    name: str
    colors: tuple
    mode: str                      # "set" | "vec"
    carriers: dict                 # color -> tuple elements | int dim
    structure: Callable            # (slot, o, basis args) -> element | Vector
    star: dict | None = None       # color -> {elem: elem} | antilinear Matrix
    labels: dict | None = None     # color -> basis names (vec mode)

    def basis(self, t):
        if self.mode == "set":
            return tuple(self.carriers[t])
        return tuple(range(self.carriers[t]))

    def basis_label(self, t, b) -> str:
        return str(b)

    def as_vector(self, t, b) -> Vector:
        return basis_vector(self.carriers[t], b)

    def evaluate(self, slot, o, args):
        """Structure map extended multilinearly (vec) / directly (set).

        ``args`` are elements in set mode and coefficient vectors in vector
        mode.
        """
        if self.mode == "set":
            return self.structure(slot, o, tuple(args))
        from .cvec import ONE
        c, t = slot
        out = vec_zero(self.carriers[t])
        pools = []
        for i, v in enumerate(args):
            pools.append(
                [(j, coeff) for j, coeff in enumerate(v) if not coeff.is_zero()]
            )
        for combo in product(*pools):
            coeff = ONE
            for _, z in combo:
                coeff = coeff * z
            idxs = tuple(j for j, _ in combo)
            base = self.structure(slot, o, idxs)
            out = vec_add(out, vec_scale(coeff, base))
        return out

    def star_of(self, t, a):
        """Involution applied to an element (vec mode: to a vector)."""
        if self.mode == "set":
            return self.star[t][a]
        return mat_vec(self.star[t], vec_conj(a))


def check_algebra(O: ComponentOperad, A: AlgebraPresentation,
                  max_arity: int, mode: str = "anchored") -> Report:
    """Unit action, equivariance and two-stage associativity on basis tuples.

    Anchored mode restricts operation classes to orbit representatives and
    permutations/inner translates close the gap exactly as for the operad
    checker; basis tuples are always exhausted.
    """
    rep = Report(f"algebra[{A.name} over {O.name}]")
    for t in O.colors:
        if t not in A.carriers:
            rep.fail("carriers", t, "missing carrier")
            return rep

    value = A.structure

    def to_vec(t, b):
        return A.as_vector(t, b) if A.mode == "vec" else b

    # unit action
    for t in O.colors:
        unit = O.units[t]
        for b in A.basis(t):
            rep.tick("unit-action")
            got = value(((t,), t), unit, (b,))
            want = to_vec(t, b)
            if got != want:
                rep.fail("unit-action", f"{t} at {b}", f"{got} != {want}")
                return rep

    seq = O.seq
    anchored = mode == "anchored"
    reps, _ = slot_orbits(seq, max_arity) if anchored else (None, None)

    # equivariance of the structure maps
    for (c, t) in seq.supported():
        n = len(c)
        if n == 0 or n > max_arity:
            continue
        for o in seq.slot(c, t):
            if reps is not None and ((c, t), o) not in reps:
                continue
            for args in product(*(A.basis(x) for x in c)):
                base = value((c, t), o, args)
                for s in perm.all_perms(n):
                    rep.tick("equivariance")
                    got = value(
                        (perm.act_right(c, s), t),
                        seq.act(c, t, o, s),
                        perm.act_right(args, s),
                    )
                    if got != base:
                        rep.fail(
                            "equivariance",
                            f"{t}<-{c} o={o} sigma={s} args={args}",
                            f"{got} != {base}",
                        )
                        return rep

    # associativity: one-stage composite vs two-stage evaluation
    for (a, t, x, inners) in gamma_shapes(
        O, max_arity, outer_reps=reps, inner_reps=reps
    ):
        bs = tuple(b for b, _ in inners)
        flat_profile = sum(bs, ())
        composite = O.gamma(a, t, x, inners)
        for args in product(*(A.basis(col) for col in flat_profile)):
            rep.tick("associativity")
            lhs = value((flat_profile, t), composite, args)
            pos = 0
            staged = []
            for (b, y) in inners:
                block = args[pos:pos + len(b)]
                pos += len(b)
                staged.append(value((b, a[len(staged)]), y, block))
            if A.mode == "set":
                rhs = A.structure((a, t), x, tuple(staged))
            else:
                rhs = A.evaluate((a, t), x, staged)
            if lhs != rhs:
                rep.fail(
                    "associativity",
                    f"{t}<-{a} x={x} args={args}",
                    f"one-stage {lhs} != two-stage {rhs}",
                )
                return rep
    rep.note(f"mode={mode}")
    return rep


def check_operad_morphism(O: ComponentOperad, P: ComponentOperad,
                          f: Mapping, phi: Mapping, max_arity: int) -> Report:
    """phi : O -> f*P must respect units, the action, gamma, and stars.

    ``phi`` maps each O-slot (c, t) to a dict sending elements of O(t; c)
    to elements of P(f(t); f(c)).
    """
    rep = Report("operad-morphism")

    def fp(c):
        return tuple(f[x] for x in c)

    def image(c, t, e):
        return phi[(c, t)][e]

    for t in O.colors:
        rep.tick("units")
        if image((t,), t, O.units[t]) != P.units[f[t]]:
            rep.fail("units", t, "unit not preserved")
            return rep
    for (c, t) in O.seq.supported():
        if len(c) > max_arity:
            continue
        for e in O.seq.slot(c, t):
            for s in perm.adjacent_transpositions(len(c)):
                rep.tick("action")
                lhs = image(perm.act_right(c, s), t, O.seq.act(c, t, e, s))
                rhs = P.seq.act(fp(c), f[t], image(c, t, e), s)
                if lhs != rhs:
                    rep.fail("action", f"{t}<-{c} sigma={s}", f"{lhs} != {rhs}")
                    return rep
            if O.star is not None and P.star is not None:
                rep.tick("star")
                lhs = image(c, t, O.star_of(c, t, e))
                rhs = P.star_of(fp(c), f[t], image(c, t, e))
                if lhs != rhs:
                    rep.fail("star", f"{t}<-{c} at {e}", f"{lhs} != {rhs}")
                    return rep
    for (a, t, x, inners) in gamma_shapes(O, max_arity):
        rep.tick("gamma")
        lhs = image(sum((b for b, _ in inners), ()), t, O.gamma(a, t, x, inners))
        rhs = P.gamma(
            fp(a), f[t], image(a, t, x),
            tuple((fp(b), image(b, a[i], y)) for i, (b, y) in enumerate(inners)),
        )
        if lhs != rhs:
            rep.fail("gamma", f"{t}<-{a} x={x}", f"{lhs} != {rhs}")
            return rep
    return rep


def pullback_algebra(f: Mapping, phi: Mapping, O: ComponentOperad,
                     P: ComponentOperad, A: AlgebraPresentation,
                     max_arity: int = 3,
                     validate: bool = True) -> AlgebraPresentation:
    """Restrict a P-algebra to an O-algebra along (f, phi).

    The carrier at color t is the P-carrier at f(t); the structure map of
    an O-operation is the structure map of its phi-image.  When
    ``validate`` is set the morphism conditions are checked first and a
    ValueError carries the witness on failure.
    """
    if validate:
        verdict = check_operad_morphism(O, P, f, phi, max_arity)
        if not verdict.ok:
            raise ValueError(f"not an operad morphism: {verdict.witnesses[0].line()}")

    def fp(c):
        return tuple(f[x] for x in c)

    def structure(slot, o, args):
        c, t = slot
        return A.structure((fp(c), f[t]), phi[(c, t)][o], args)

    star = None
    if A.star is not None:
        star = {t: A.star[f[t]] for t in O.colors}
    return AlgebraPresentation(
        name=f"{A.name} along {getattr(O, 'name', 'O')}",
        colors=O.colors,
        mode=A.mode,
        carriers={t: A.carriers[f[t]] for t in O.colors},
        structure=structure,
        star=star,
    )


# --- monoid (coend) formulation oracle --------------------------------------

def _gamma_hat(O: ComponentOperad, slot, raw):
    """Induced map (O o O) -> O on one raw coend tuple."""
    c, t = slot
    a, bs, kappa, x, ys = raw
    v = O.gamma(a, t, x, tuple(zip(bs, ys)))
    return O.seq.act(sum(bs, ()), t, v, kappa)


def _attachment_groups(kappa, lengths):
    """Distribute outer positions below the inner blocks.

    Position j of the outer profile corresponds via kappa to a position in
    the block concatenation; group j (0-based) under the block containing
    kappa(j), ordered by within-block position.
    """
    m = len(lengths)
    offsets = [0] * m
    acc = 0
    for i, ln in enumerate(lengths):
        offsets[i] = acc
        acc += ln
    groups: list = [[] for _ in range(m)]
    for j, kj in enumerate(kappa):
        i = max(idx for idx in range(m) if offsets[idx] < kj)
        groups[i].append((kj, j))
    for g in groups:
        g.sort()
    return groups


def check_monoid_formulation(O: ComponentOperad, max_arity: int,
                             cap: int = 500_000,
                             min_arity: int = 0) -> Report:
    """Compare the component composition with its coend-class formulation.

    Builds O o O and (O o O) o O as explicit coends truncated at
    ``max_arity``, induces the composition on classes, and verifies:

    - the induced map is constant on every coend class (well-definedness),
    - it commutes with the slot action,
    - the unit diagrams against the circle unit,
    - the associativity square through the associator, class by class.
    """
    from .symseq import ResourceCapError

    rep = Report(f"monoid-form[{O.name}]")
    X = truncate_seq(O.seq, max_arity, min_arity)
    try:
        OO = circle_product(X, X, cap=cap, max_arity=max_arity)
    except ResourceCapError as exc:
        rep.fail("resources", "O o O", str(exc))
        return rep

    # well-definedness on classes + naturality
    for slot in OO.seq.supported():
        for cls in OO.seq.slot(*slot):
            values = {_gamma_hat(O, slot, raw) for raw in OO.members[cls]}
            rep.tick("well-defined")
            if len(values) != 1:
                rep.fail("well-defined", f"{slot}", f"class {cls} maps to {len(values)} values")
                return rep
        c, t = slot
        for s in perm.adjacent_transpositions(len(c)):
            c2 = perm.act_right(c, s)
            for cls in OO.seq.slot(*slot):
                rep.tick("naturality")
                lhs = _gamma_hat(O, (c2, t), OO.seq.act(c, t, cls, s))
                rhs = O.seq.act(c, t, _gamma_hat(O, slot, cls), s)
                if lhs != rhs:
                    rep.fail("naturality", f"{slot} sigma={s}", f"{lhs} != {rhs}")
                    return rep

    # unit diagrams
    IU = circle_unit(O.colors)
    IO = circle_product(IU, X, cap=cap, max_arity=max_arity)
    for slot in IO.seq.supported():
        c, t = slot
        for cls in IO.seq.slot(*slot):
            rep.tick("left-unit")
            values = set()
            for (aa, bbs, kap, u, yy) in IO.members[cls]:
                mapped = _gamma_hat(O, slot, (aa, bbs, kap, O.units[aa[0]], yy))
                unitor = O.seq.act(bbs[0], t, yy[0], kap)
                values.add((mapped, unitor))
                if mapped != unitor:
                    rep.fail("left-unit", f"{slot}", f"{mapped} != {unitor}")
                    return rep
            if len(values) != 1:
                rep.fail("left-unit", f"{slot}", "composite not constant on class")
                return rep
    OI = circle_product(X, IU, cap=cap, max_arity=max_arity)
    for slot in OI.seq.supported():
        c, t = slot
        for cls in OI.seq.slot(*slot):
            rep.tick("right-unit")
            for (aa, bbs, kap, x, us) in OI.members[cls]:
                units = tuple(O.units[aa[i]] for i in range(len(aa)))
                mapped = _gamma_hat(O, slot, (aa, bbs, kap, x, units))
                unitor = O.seq.act(aa, t, x, kap)
                if mapped != unitor:
                    rep.fail("right-unit", f"{slot}", f"{mapped} != {unitor}")
                    return rep

    # associativity through the associator
    try:
        OOO = circle_product(OO.seq, X, cap=cap, max_arity=max_arity)
    except ResourceCapError as exc:
        rep.fail("resources", "(O o O) o O", str(exc))
        return rep
    for slot in OOO.seq.supported():
        c, t = slot
        for cls in OOO.seq.slot(*slot):
            rep.tick("associativity")
            aprime, bprime, kprime, xi, zs = cls
            # left path: collapse the outer (O o O) class first
            left_outer = _gamma_hat(O, (aprime, t), xi)
            left = _gamma_hat(O, slot, (aprime, bprime, kprime, left_outer, zs))
            # right path: reassociate, collapse the inner stages first
            a, bs, kappa, x, ys = xi
            groups = _attachment_groups(kappa, [len(b) for b in bs])
            ws = []
            ds = []
            for i, grp in enumerate(groups):
                zprofiles = tuple(bprime[j] for (_, j) in grp)
                zelems = tuple(zs[j] for (_, j) in grp)
                ds.append(sum(zprofiles, ()))
                ws.append(O.gamma(bs[i], a[i], ys[i], tuple(zip(zprofiles, zelems))))
            inner_value = O.gamma(a, t, x, tuple(zip(ds, ws)))
            jperm = tuple(j + 1 for grp in groups for (_, j) in grp)
            lam = perm.block_permutation(
                perm.inverse(jperm),
                tuple(len(bprime[j - 1]) for j in jperm),
            )
            kdp = perm.compose(lam, kprime)
            right = O.seq.act(
                sum((bprime[j - 1] for j in jperm), ()), t, inner_value, kdp
            )
            if left != right:
                rep.fail("associativity", f"{slot}", f"{left} != {right}")
                return rep
    rep.note(f"classes: OO={OO.seq.total_elements()}, OOO={OOO.seq.total_elements()}")
    return rep
