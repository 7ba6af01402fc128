"""Operads of orthogonal categories and the functor correspondence.

For a finite orthogonal category the operation set over a profile c and
target t consists of pairs (permutation, tuple of morphisms c_i -> t)
modulo the equivalence generated by transposing adjacent entries of the
reindexed tuple when they form an orthogonal pair: from (s, f), the
neighbor (tau_i . s, f) is reachable exactly when entries i and i+1 of
``f . s^-1`` are orthogonal.  Classes are represented by their
lexicographically least member; orbits are enumerated by breadth-first
search, so representatives are independent of enumeration order.

Composition acts by operadic substitution on the permutation parts and by
categorical composition on the morphism parts; the slot action is
``(s, f) . s' = (s s', f s')``.  The order-reversal involution sends a
class to the class of (rho . s, f); the identity variant leaves classes
untouched.  Algebras over these operads are interchangeable with
orthogonally-commutative functors into monoids, realized here in both
directions with explicit well-definedness verification.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product

from . import perm
from .cvec import basis_vector
from .fincat import OrthCategory, Profile, hom_tuple, profiles_up_to
from .operad import AlgebraPresentation, ArityCapError, ComponentOperad
from .reporting import Report
from .staralg import FunctorToMon, MonoidPresentation
from .symseq import SymSeqSet

REVERSE = "reverse"
IDENTITY = "identity"


@dataclass(frozen=True, order=True)
class OpClass:
    """Canonical representative of an operation class: (permutation, morphisms)."""

    sigma: tuple
    morphs: tuple

    def __str__(self) -> str:
        body = ",".join(map(str, self.sigma)) or "-"
        names = ",".join(self.morphs) or "-"
        return f"[{body}|{names}]"


@dataclass
class AqftAux:
    """Per-slot orbit bookkeeping kept on the built operad."""

    cat: OrthCategory
    class_of: dict   # (profile, target) -> {(sigma, morphs): OpClass}
    members: dict    # (profile, target, OpClass) -> tuple of (sigma, morphs)


def _slot_orbits_for(cat: OrthCategory, c: Profile, t: str):
    """Orbit decomposition of (permutations x morphism tuples) at one slot."""
    n = len(c)
    tuples = hom_tuple(cat, c, t)
    if not tuples:
        return None
    perms = perm.all_perms(n)
    taus = perm.adjacent_transpositions(n)
    class_of: dict = {}
    members: dict = {}
    reps = []
    for f in tuples:
        unseen = set(perms)
        while unseen:
            start = min(unseen)
            orbit = {start}
            queue = [start]
            while queue:
                s = queue.pop()
                reindexed = perm.act_right(f, perm.inverse(s))
                for i, tau in enumerate(taus):
                    if cat.is_orth(reindexed[i], reindexed[i + 1]):
                        s2 = perm.compose(tau, s)
                        if s2 not in orbit:
                            orbit.add(s2)
                            queue.append(s2)
            unseen -= orbit
            rep_sigma = min(orbit)
            rep = OpClass(rep_sigma, f)
            reps.append(rep)
            members[rep] = tuple(sorted(orbit))
            for s in orbit:
                class_of[(s, f)] = rep
    reps.sort()
    return reps, class_of, members


def build_aqft_operad(cat: OrthCategory, max_arity: int,
                      name: str | None = None) -> ComponentOperad:
    """Operation classes, slot action, composition and units, up to max_arity."""
    if max_arity < 0:
        raise ValueError("max_arity must be nonnegative")
    colors = cat.objects
    slots: dict = {}
    class_of: dict = {}
    members: dict = {}
    for c in profiles_up_to(colors, max_arity):
        for t in colors:
            got = _slot_orbits_for(cat, c, t)
            if got is None:
                continue
            reps, cmap, mem = got
            slots[(c, t)] = tuple(reps)
            class_of[(c, t)] = cmap
            for rep, orbit in mem.items():
                members[(c, t, rep)] = orbit

    act_cache: dict = {}

    def act(c, t, e: OpClass, s):
        key = (c, t, e, s)
        got = act_cache.get(key)
        if got is None:
            got = class_of[(perm.act_right(c, s), t)][
                (perm.compose(e.sigma, s), perm.act_right(e.morphs, s))
            ]
            act_cache[key] = got
        return got

    seq = SymSeqSet(colors, slots, act)

    composition = cat.composition

    def gamma_fn(a, t, x: OpClass, inners):
        result: list = []
        sigma_parts: list = []
        morphs: list = []
        xm = x.morphs
        for i, (b, y) in enumerate(inners):
            result.extend(b)
            sigma_parts.append(y.sigma)
            fi = xm[i]
            for g in y.morphs:
                morphs.append(composition[(g, fi)])
        key = (tuple(result), t)
        cmap = class_of.get(key)
        if cmap is None:
            raise ArityCapError(
                f"profile {key[0]} beyond the stored arity bound"
            )
        sigma = perm._substitution_cached(x.sigma, tuple(sigma_parts))
        return cmap[(sigma, tuple(morphs))]

    units = {
        t: class_of[((t,), t)][(perm.identity(1), (cat.identities[t],))]
        for t in colors
    }
    return ComponentOperad(
        name=name or "aqft-operad",
        seq=seq,
        units=units,
        gamma_fn=gamma_fn,
        max_arity=max_arity,
        aux=AqftAux(cat, class_of, members),
    )


def attach_star(O: ComponentOperad, variant: str) -> ComponentOperad:
    """Equip a built operad with its order-reversal or identity involution.

    The reverse variant maps the class of (s, f) to the class of
    (rho_n . s, f); well-definedness is verified over every orbit member.
    """
    if variant not in (REVERSE, IDENTITY):
        raise ValueError(f"unknown star variant {variant!r}")
    aux: AqftAux = O.aux
    star: dict = {}
    for (c, t) in O.seq.supported():
        table: dict = {}
        n = len(c)
        rho = perm.order_reversal(n)
        cmap = aux.class_of[(c, t)]
        for e in O.seq.slot(c, t):
            if variant == IDENTITY:
                table[e] = e
                continue
            image = cmap[(perm.compose(rho, e.sigma), e.morphs)]
            for s in aux.members[(c, t, e)]:
                other = cmap[(perm.compose(rho, s), e.morphs)]
                if other != image:
                    raise AssertionError(
                        f"order-reversal not constant on the class of {e} at {t}<-{c}"
                    )
            table[e] = image
        star[(c, t)] = table
    return replace(O, name=f"{O.name}[star={variant}]", star=star)


def slot_counts(O: ComponentOperad) -> dict:
    """Total class count per arity (summed over slots of that length)."""
    out: dict = {}
    for (c, t) in O.seq.supported():
        out[len(c)] = out.get(len(c), 0) + len(O.seq.slot(c, t))
    return out


def dump_operad_lines(O: ComponentOperad, gamma_arity: int = 2) -> list:
    """Deterministic dump: counts, per-slot representatives, composition table."""
    out = []
    counts = slot_counts(O)
    arities = range(0, (max(counts) + 1) if counts else 0)
    out.append("counts: " + " ".join(str(counts.get(n, 0)) for n in arities))
    for (c, t) in O.seq.supported():
        elems = O.seq.slot(c, t)
        out.append(f"slot {t} <- ({','.join(c)}) : {len(elems)} class(es)")
        for e in elems:
            line = f"  {e}"
            if O.star is not None:
                line += f"  star-> {O.star[(c, t)][e]}"
            out.append(line)
    from .operad import gamma_shapes

    out.append(f"composition (result arity <= {gamma_arity}):")
    shown = 0
    for (a, t, x, inners) in gamma_shapes(O, min(gamma_arity, O.max_arity)):
        value = O.gamma(a, t, x, inners)
        args = "; ".join(f"{y}@({','.join(b)})" for b, y in inners)
        out.append(f"  {t}<-({','.join(a)}) {x} ( {args} ) = {value}")
        shown += 1
    if gamma_arity < O.max_arity:
        out.append(
            f"composition table truncated at result arity {gamma_arity}"
            f" (stored bound {O.max_arity})"
        )
    return out


# --- the functor correspondence ----------------------------------------------

def check_perp_commutativity(F: FunctorToMon, cat: OrthCategory) -> Report:
    """Images of orthogonal pairs must multiply commutatively."""
    rep = Report("perp-commutativity")
    for f1, f2 in sorted(cat.orth):
        t = cat.target(f1)
        mt = F.monoids[t]
        m1 = F.monoids[cat.source(f1)]
        m2 = F.monoids[cat.source(f2)]
        for (la, a), (lb, b) in product(m1.basis(), m2.basis()):
            rep.tick("pairs")
            x, y = F.apply(f1, a), F.apply(f2, b)
            if mt.multiply(x, y) != mt.multiply(y, x):
                rep.fail(
                    "pairs", f"({f1}, {f2}) at ({la}, {lb})",
                    "orthogonal images do not commute",
                )
                return rep
    return rep


def algebra_from_functor(F: FunctorToMon, cat: OrthCategory,
                         O: ComponentOperad,
                         verify: bool = True,
                         verify_arity: int | None = None) -> AlgebraPresentation:
    """Structure maps: the class of (s, f) acts by the s^-1-ordered product
    of the morphism images.

    With ``verify`` the formula is recomputed from every orbit member of
    every class (arity <= ``verify_arity``, default the stored bound) and
    must agree on all basis tuples; this is exactly orthogonal
    commutativity, re-derived instead of trusted.
    """
    modes = {F.monoids[t].mode for t in cat.objects}
    if len(modes) != 1:
        raise ValueError("mixed set/vec functors are not supported")
    mode = modes.pop()

    if mode == "vec":
        # image of each source basis vector, per morphism
        columns = {
            fname: tuple(
                F.apply(fname, basis_vector(F.monoids[src].dim, i))
                for i in range(F.monoids[src].dim)
            )
            for fname, (src, _tgt) in cat.morphisms.items()
        }

        def image(fname, arg):
            return columns[fname][arg]
    else:
        def image(fname, arg):
            return F.apply(fname, arg)

    def eval_pair(t, sigma, morphs, args):
        """Ordered product of morphism images in sigma^-1 order.

        ``args`` are basis indices in vector mode, elements in set mode.
        """
        mt = F.monoids[t]
        inv = perm.inverse(sigma)
        acc = mt.unit
        for j in range(len(sigma)):
            idx = inv[j] - 1
            acc = mt.multiply(acc, image(morphs[idx], args[idx]))
        return acc

    def structure(slot, o: OpClass, args):
        c, t = slot
        return eval_pair(t, o.sigma, o.morphs, tuple(args))

    carriers = {
        t: (tuple(F.monoids[t].elements) if mode == "set" else F.monoids[t].dim)
        for t in cat.objects
    }
    star = None
    if all(F.monoids[t].star is not None for t in cat.objects):
        star = {t: F.monoids[t].star for t in cat.objects}
    labels = None
    if mode == "vec":
        labels = {t: tuple(F.monoids[t].elements) for t in cat.objects}
    A = AlgebraPresentation(
        name=f"functor-algebra[{','.join(cat.objects)}]",
        colors=cat.objects,
        mode=mode,
        carriers=carriers,
        structure=structure,
        star=star,
        labels=labels,
    )

    if verify:
        bound = O.max_arity if verify_arity is None else verify_arity
        aux: AqftAux = O.aux
        for (c, t) in O.seq.supported():
            if len(c) > bound:
                continue
            for e in O.seq.slot(c, t):
                members = aux.members[(c, t, e)]
                if len(members) == 1:
                    continue  # nothing to compare: the class is a single pair
                for args in product(*(A.basis(x) for x in c)):
                    want = structure((c, t), e, args)
                    for sig in members:
                        got = eval_pair(t, sig, e.morphs, args)
                        if got != want:
                            raise ValueError(
                                f"structure map not constant on the class {e} "
                                f"at {t}<-{c}: member {sig} disagrees on {args}"
                            )
    return A


def functor_from_algebra(A: AlgebraPresentation, O: ComponentOperad,
                         cat: OrthCategory) -> FunctorToMon:
    """Extract the monoids and morphism images from an algebra.

    The monoid at t is carried by the algebra carrier with multiplication
    the action of the binary identity-pair class and unit the action of the
    nullary class; the image of a morphism is the action of its unary
    class.
    """
    aux: AqftAux = O.aux
    monoids: dict = {}
    for t in cat.objects:
        idt = cat.identities[t]
        cls2 = aux.class_of[((t, t), t)][(perm.identity(2), (idt, idt))]
        cls0 = aux.class_of[((), t)][((), ())]
        if A.mode == "set":
            elements = tuple(A.carriers[t])
            mul = {
                (a, b): A.structure(((t, t), t), cls2, (a, b))
                for a in elements for b in elements
            }
            unit = A.structure(((), t), cls0, ())
            star = A.star[t] if A.star is not None else None
            monoids[t] = MonoidPresentation(
                name=f"A[{t}]", elements=elements, mul=mul, unit=unit,
                star=star, mode="set",
            )
        else:
            dim = A.carriers[t]
            mul = {
                (i, j): A.structure(((t, t), t), cls2, (i, j))
                for i in range(dim) for j in range(dim)
            }
            unit = A.structure(((), t), cls0, ())
            star = A.star[t] if A.star is not None else None
            names = (
                tuple(A.labels[t]) if A.labels is not None
                else tuple(f"e{i}" for i in range(dim))
            )
            monoids[t] = MonoidPresentation(
                name=f"A[{t}]", elements=names, mul=mul, unit=unit,
                star=star, mode="vec",
            )
    maps: dict = {}
    for fname in sorted(cat.morphisms):
        src, tgt = cat.morphisms[fname]
        cls1 = aux.class_of[((src,), tgt)][(perm.identity(1), (fname,))]
        if A.mode == "set":
            maps[fname] = {
                a: A.structure(((src,), tgt), cls1, (a,)) for a in A.carriers[src]
            }
        else:
            cols = [
                A.structure(((src,), tgt), cls1, (i,))
                for i in range(A.carriers[src])
            ]
            maps[fname] = tuple(
                tuple(col[r] for col in cols) for r in range(A.carriers[tgt])
            )
    return FunctorToMon(monoids=monoids, maps=maps)


def functors_equal(F: FunctorToMon, G: FunctorToMon, cat: OrthCategory) -> bool:
    """Presentation equality: same tables and matrices everywhere."""
    for t in cat.objects:
        mf, mg = F.monoids[t], G.monoids[t]
        if (mf.mode, mf.elements, mf.mul, mf.unit, mf.star) != (
            mg.mode, mg.elements, mg.mul, mg.unit, mg.star
        ):
            return False
    for f in cat.morphisms:
        if F.maps[f] != G.maps[f]:
            return False
    return True


def algebra_tables_equal(A: AlgebraPresentation, B: AlgebraPresentation,
                         O: ComponentOperad, max_arity: int) -> bool:
    """Structure maps agree on every class and basis tuple up to max_arity."""
    if (A.mode, A.colors) != (B.mode, B.colors) or A.carriers != B.carriers:
        return False
    for (c, t) in O.seq.supported():
        if len(c) > max_arity:
            continue
        for e in O.seq.slot(c, t):
            for args in product(*(A.basis(x) for x in c)):
                if A.structure((c, t), e, args) != B.structure((c, t), e, args):
                    return False
    return True
