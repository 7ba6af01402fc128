"""Finite categories with orthogonality relations, and profile utilities.

A category is given by objects, named morphisms with source/target, and a
total composition table on composable pairs; identities may be synthesized.
An orthogonality relation is a set of ordered pairs of morphisms with a
common target that is symmetric and stable under post- and pre-composition.

Profiles are plain tuples of object labels; the empty profile is allowed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from . import perm

Profile = tuple


class CategoryError(ValueError):
    """Raised when raw category data violates an axiom; message names a witness."""


@dataclass(frozen=True)
class OrthCategory:
    """Validated finite category with an orthogonality relation.

    ``composition[(first, then)]`` is the composite "first followed by then".
    """

    objects: tuple
    morphisms: dict  # name -> (source, target)
    composition: dict  # (first, then) -> result
    identities: dict  # object -> identity name
    orth: frozenset = field(default_factory=frozenset)

    def source(self, f: str) -> str:
        return self.morphisms[f][0]

    def target(self, f: str) -> str:
        return self.morphisms[f][1]

    def compose(self, first: str, then: str) -> str:
        return self.composition[(first, then)]

    def hom(self, a: str, b: str) -> tuple:
        return tuple(
            sorted(n for n, (s, t) in self.morphisms.items() if s == a and t == b)
        )

    def is_orth(self, f1: str, f2: str) -> bool:
        return (f1, f2) in self.orth

    def with_orth(self, orth: Iterable) -> "OrthCategory":
        return OrthCategory(
            self.objects, self.morphisms, self.composition, self.identities,
            frozenset(orth),
        )


def validate_category(
    objects: Sequence[str],
    morphisms: Mapping[str, tuple],
    composition: Mapping[tuple, str],
    identities: Mapping[str, str] | None = None,
) -> OrthCategory:
    """Build a validated category; identities are synthesized when omitted.

    Raises CategoryError naming the first failing axiom instance: unknown
    labels, a composition-table gap, a missing identity, an identity that is
    not a two-sided unit, or a non-associative composable triple.
    """
    objects = tuple(sorted(objects))
    morphisms = dict(morphisms)
    composition = dict(composition)

    for name, (s, t) in morphisms.items():
        if s not in objects or t not in objects:
            raise CategoryError(f"morphism {name}: unknown object in {s} -> {t}")

    if identities is None:
        identities = {}
        for x in objects:
            name = f"id_{x}"
            if name in morphisms and morphisms[name] != (x, x):
                raise CategoryError(f"reserved identity name {name} used for a non-identity")
            morphisms.setdefault(name, (x, x))
            identities[x] = name
        # identity composition rows are synthesized too
        for f, (s, t) in morphisms.items():
            composition.setdefault((identities[s], f), f)
            composition.setdefault((f, identities[t]), f)
    else:
        identities = dict(identities)

    for x in objects:
        if x not in identities or identities[x] not in morphisms:
            raise CategoryError(f"missing identity for object {x}")
        if morphisms[identities[x]] != (x, x):
            raise CategoryError(f"identity of {x} is not an endomorphism of {x}")

    names = sorted(morphisms)
    for f in names:
        for g in names:
            if morphisms[f][1] != morphisms[g][0]:
                continue
            if (f, g) not in composition:
                raise CategoryError(f"composition table gap: ({f}, {g})")
            h = composition[(f, g)]
            if h not in morphisms:
                raise CategoryError(f"composite ({f}, {g}) -> unknown morphism {h}")
            if morphisms[h] != (morphisms[f][0], morphisms[g][1]):
                raise CategoryError(
                    f"composite ({f}, {g}) = {h} has wrong source/target"
                )

    for f, (s, t) in morphisms.items():
        if composition[(identities[s], f)] != f:
            raise CategoryError(f"missing identity law: id_{s} then {f}")
        if composition[(f, identities[t])] != f:
            raise CategoryError(f"missing identity law: {f} then id_{t}")

    for f in names:
        for g in names:
            if morphisms[f][1] != morphisms[g][0]:
                continue
            for h in names:
                if morphisms[g][1] != morphisms[h][0]:
                    continue
                left = composition[(composition[(f, g)], h)]
                right = composition[(f, composition[(g, h)])]
                if left != right:
                    raise CategoryError(
                        f"non-associative triple ({f}, {g}, {h}): "
                        f"{left} != {right}"
                    )

    return OrthCategory(objects, morphisms, composition, identities)


def validate_orthogonality(cat: OrthCategory, pairs: Iterable) -> frozenset:
    """Check symmetry, common targets, and composition stability.

    Returns the relation as a frozenset of ordered pairs, or raises
    CategoryError with a witness.
    """
    rel = frozenset(tuple(p) for p in pairs)
    for f1, f2 in rel:
        if f1 not in cat.morphisms or f2 not in cat.morphisms:
            raise CategoryError(f"orthogonal pair ({f1}, {f2}): unknown morphism")
        if cat.target(f1) != cat.target(f2):
            raise CategoryError(
                f"orthogonal pair ({f1}, {f2}) lacks a common target"
            )
        if (f2, f1) not in rel:
            raise CategoryError(f"asymmetry witness: ({f1}, {f2}) without ({f2}, {f1})")
    names = sorted(cat.morphisms)
    for f1, f2 in sorted(rel):
        t = cat.target(f1)
        for g in names:
            if cat.source(g) != t:
                continue
            post = (cat.compose(f1, g), cat.compose(f2, g))
            if post not in rel:
                raise CategoryError(
                    f"post-composition stability witness: {g} o ({f1}, {f2})"
                )
        for h1 in names:
            if cat.target(h1) != cat.source(f1):
                continue
            for h2 in names:
                if cat.target(h2) != cat.source(f2):
                    continue
                pre = (cat.compose(h1, f1), cat.compose(h2, f2))
                if pre not in rel:
                    raise CategoryError(
                        f"pre-composition stability witness: "
                        f"({f1} o {h1}, {f2} o {h2})"
                    )
    return rel


def orthogonal_closure(cat: OrthCategory, generators: Iterable) -> frozenset:
    """Least symmetric, composition-stable relation containing the generators.

    Computed by fixpoint iteration; the result always passes
    validate_orthogonality.
    """
    rel = set()
    for f1, f2 in generators:
        if f1 not in cat.morphisms or f2 not in cat.morphisms:
            raise CategoryError(f"generator pair ({f1}, {f2}): unknown morphism")
        if cat.target(f1) != cat.target(f2):
            raise CategoryError(f"generator pair ({f1}, {f2}) lacks a common target")
        rel.add((f1, f2))
    names = sorted(cat.morphisms)
    frontier = set(rel)
    while frontier:
        new: set = set()
        def add(p):
            if p not in rel:
                rel.add(p)
                new.add(p)
        for f1, f2 in sorted(frontier):
            add((f2, f1))
            t = cat.target(f1)
            for g in names:
                if cat.source(g) == t:
                    add((cat.compose(f1, g), cat.compose(f2, g)))
            for h1 in names:
                if cat.target(h1) != cat.source(f1):
                    continue
                for h2 in names:
                    if cat.target(h2) != cat.source(f2):
                        continue
                    add((cat.compose(h1, f1), cat.compose(h2, f2)))
        frontier = new
    return frozenset(rel)


def hom_tuple(cat: OrthCategory, c: Profile, t: str) -> list:
    """All tuples (f_1, ..., f_n) with f_i : c_i -> t; [()] for the empty profile."""
    for x in c:
        if x not in cat.objects:
            raise CategoryError(f"unknown object {x} in profile")
    if t not in cat.objects:
        raise CategoryError(f"unknown object {t}")
    homs = [cat.hom(x, t) for x in c]
    return [tuple(fs) for fs in product(*homs)]


def profile_rev(c: Profile) -> tuple:
    """Reversed profile together with the order-reversal permutation."""
    rho = perm.order_reversal(len(c))
    return perm.act_right(c, rho), rho


def profiles_up_to(objects: Sequence[str], max_len: int) -> list:
    """All profiles of length <= max_len in (length, lexicographic) order."""
    objects = tuple(sorted(objects))
    out: list = []
    for n in range(max_len + 1):
        out.extend(product(objects, repeat=n))
    return out
