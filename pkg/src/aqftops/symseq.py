"""Finitely supported Set-valued symmetric sequences and the circle product.

A symmetric sequence assigns to every (profile, target color) pair a finite
set of elements together with a right action of profile permutations,
functorial in the permutation.  The circle product of two sequences is
computed as an explicit finite coend: a disjoint union of raw tuples

    (a, (b_1, ..., b_m), kappa, x, (y_1, ..., y_m))

with ``x`` in X(a; t), ``y_i`` in Y(b_i; a_i) and ``kappa`` a permutation
witnessing ``(b_1 (+) ... (+) b_m) kappa = c``, quotiented by the relations
generated by the indexing groupoids:

- outer: a permutation ``s`` of the a-profile reorders the inner blocks and
  compensates kappa by the inverse of the corresponding block permutation;
- inner: a permutation ``tau`` of one b_i compensates kappa by the inverse
  of its block sum.

The quotient is a connected-components computation (union-find).  Class
representatives are the lexicographically least raw tuples under a fixed
total order, so results are reproducible and independent of enumeration
order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Mapping

from . import perm
from .fincat import Profile


class ResourceCapError(RuntimeError):
    """Raised when a coend enumeration exceeds its raw-tuple budget."""


class SymSeqSet:
    """Finitely supported functor from (profiles x colors) to finite sets."""

    def __init__(self, colors, slots: Mapping, act: Callable):
        self.colors = tuple(sorted(colors))
        self._slots = {k: tuple(v) for k, v in slots.items() if len(v) > 0}
        self._act = act
        self._index = {
            key: {e: i for i, e in enumerate(elems)}
            for key, elems in self._slots.items()
        }

    def supported(self) -> list:
        return sorted(self._slots, key=lambda k: (len(k[0]), k[0], k[1]))

    def slot(self, c: Profile, t) -> tuple:
        return self._slots.get((c, t), ())

    def has_slot(self, c: Profile, t) -> bool:
        return (c, t) in self._slots

    def index(self, c: Profile, t, e) -> int:
        return self._index[(c, t)][e]

    def act(self, c: Profile, t, e, s: perm.Perm):
        """Image of e under the slot bijection X(s) : X(t; c) -> X(t; cs)."""
        return self._act(c, t, e, s)

    def total_elements(self) -> int:
        return sum(len(v) for v in self._slots.values())


def from_action_tables(colors, slots: Mapping, tables: Mapping) -> SymSeqSet:
    """Sequence with the action stored explicitly.

    ``tables[(c, t)][sigma][e]`` is the image of e under sigma; entries for
    the identity may be omitted.
    """
    def act(c, t, e, s):
        if s == perm.identity(len(s)):
            return e
        return tables[(c, t)][s][e]

    return SymSeqSet(colors, slots, act)


def circle_unit(colors) -> SymSeqSet:
    """Unit for the circle product: a single element on each slot ((t), t)."""
    colors = tuple(sorted(colors))
    if not colors:
        raise ValueError("empty color set")
    slots = {((t,), t): ("1",) for t in colors}
    return SymSeqSet(colors, slots, lambda c, t, e, s: e)


def symmetric_group_sequence(max_arity: int, include_nullary: bool = False,
                             color: str = "*") -> SymSeqSet:
    """One-color sequence with all degree-n permutations in arity n.

    The slot action is right multiplication.  Arity 0 is excluded by
    default; with it, circle products against this sequence stay finite
    only because the support is truncated at ``max_arity``.
    """
    lo = 0 if include_nullary else 1
    slots = {
        ((color,) * n, color): tuple(perm.all_perms(n))
        for n in range(lo, max_arity + 1)
    }
    return SymSeqSet((color,), slots, lambda c, t, e, s: perm.compose(e, s))


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


@dataclass
class CircleProduct:
    """Circle product with its raw-tuple bookkeeping kept for oracles."""

    left: SymSeqSet
    right: SymSeqSet
    seq: SymSeqSet
    raw_to_rep: dict     # raw tuple -> canonical representative raw tuple
    members: dict        # representative -> tuple of raw tuples in its class
    slot_of_raw: dict    # raw tuple -> (profile, target)

    def classes(self, c: Profile, t) -> tuple:
        return self.seq.slot(c, t)


def _raw_key(X: SymSeqSet, Y: SymSeqSet, t, raw):
    a, bs, kappa, x, ys = raw
    return (
        a, bs, kappa, X.index(a, t, x),
        tuple(Y.index(bs[i], a[i], ys[i]) for i in range(len(bs))),
    )


def circle_product(X: SymSeqSet, Y: SymSeqSet, cap: int = 500_000,
                   max_arity: int | None = None) -> CircleProduct:
    """Coend computation of (X o Y); see the module docstring for the data.

    ``max_arity`` truncates the result to slots of profile length at most
    that bound (the factorial growth of the connecting permutations makes
    untruncated products impractical beyond small supports).
    """
    if X.colors != Y.colors:
        raise ValueError("color-set mismatch")

    y_by_target: dict = {t: [] for t in Y.colors}
    for (b, t) in Y.supported():
        y_by_target[t].append(b)

    raws_by_slot: dict = {}
    count = 0
    for (a, t) in X.supported():
        m = len(a)
        xs = X.slot(a, t)
        b_choices = [y_by_target[a[i]] for i in range(m)]
        for bs in product(*b_choices):
            concat = sum(bs, ())
            n = len(concat)
            if max_arity is not None and n > max_arity:
                continue
            y_lists = [Y.slot(bs[i], a[i]) for i in range(m)]
            for kappa in perm.all_perms(n):
                c = perm.act_right(concat, kappa)
                slot = (c, t)
                bucket = raws_by_slot.setdefault(slot, [])
                for x in xs:
                    for ys in product(*y_lists):
                        bucket.append((a, bs, kappa, x, ys))
                        count += 1
                        if count > cap:
                            raise ResourceCapError(
                                f"circle product exceeds {cap} raw tuples"
                            )

    uf = _UnionFind()
    slot_of_raw: dict = {}
    for slot, raws in raws_by_slot.items():
        for raw in raws:
            uf.add(raw)
            slot_of_raw[raw] = slot

    for slot, raws in raws_by_slot.items():
        t = slot[1]
        for raw in raws:
            a, bs, kappa, x, ys = raw
            m = len(a)
            lengths = tuple(len(b) for b in bs)
            for s in perm.adjacent_transpositions(m):
                pi = perm.block_permutation(s, lengths)
                other = (
                    perm.act_right(a, s),
                    perm.act_right(bs, s),
                    perm.compose(perm.inverse(pi), kappa),
                    X.act(a, t, x, s),
                    perm.act_right(ys, s),
                )
                uf.union(raw, other)
            for i in range(m):
                k = len(bs[i])
                for tau in perm.adjacent_transpositions(k):
                    bsum = perm.block_sum(
                        [tau if j == i else perm.identity(lengths[j]) for j in range(m)]
                    )
                    new_bs = list(bs)
                    new_bs[i] = perm.act_right(bs[i], tau)
                    new_ys = list(ys)
                    new_ys[i] = Y.act(bs[i], a[i], ys[i], tau)
                    other = (
                        a, tuple(new_bs),
                        perm.compose(perm.inverse(bsum), kappa),
                        x, tuple(new_ys),
                    )
                    uf.union(raw, other)

    raw_to_rep: dict = {}
    members: dict = {}
    slots: dict = {}
    for slot, raws in sorted(raws_by_slot.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
        t = slot[1]
        groups: dict = {}
        for raw in raws:
            groups.setdefault(uf.find(raw), []).append(raw)
        reps = []
        for group in groups.values():
            group = sorted(set(group), key=lambda r: _raw_key(X, Y, t, r))
            rep = group[0]
            reps.append(rep)
            members[rep] = tuple(group)
            for raw in group:
                raw_to_rep[raw] = rep
        reps.sort(key=lambda r: _raw_key(X, Y, t, r))
        slots[slot] = tuple(reps)

    def act(c, t, e, s):
        a, bs, kappa, x, ys = e
        return raw_to_rep[(a, bs, perm.compose(kappa, s), x, ys)]

    seq = SymSeqSet(X.colors, slots, act)
    return CircleProduct(X, Y, seq, raw_to_rep, members, slot_of_raw)


# --- color change -----------------------------------------------------------

def _map_profile(f: Mapping, c: Profile) -> Profile:
    return tuple(f[x] for x in c)


def pullback(f: Mapping, X: SymSeqSet, source_colors) -> SymSeqSet:
    """Pullback along a color map: slot (c, t) is the X-slot (f(c), f(t))."""
    source_colors = tuple(sorted(source_colors))
    for x in source_colors:
        if x not in f:
            raise ValueError(f"color map not total: {x}")
    fibers: dict = {}
    for x in source_colors:
        fibers.setdefault(f[x], []).append(x)

    slots: dict = {}
    for (d, s) in X.supported():
        pre_targets = fibers.get(s, [])
        pre_entries = [fibers.get(col, []) for col in d]
        if not pre_targets or any(not p for p in pre_entries):
            continue
        for c in product(*pre_entries):
            for t in pre_targets:
                slots[(c, t)] = X.slot(d, s)

    def act(c, t, e, sg):
        return X.act(_map_profile(f, c), f[t], e, sg)

    return SymSeqSet(source_colors, slots, act)


def pullback_tensor_map(f: Mapping, source_prod: CircleProduct,
                        target_prod: CircleProduct) -> dict:
    """The monoidal structure map (f*X o f*Y) -> f*(X o Y) on classes.

    ``source_prod`` must be the circle product of the pullbacks and
    ``target_prod`` the product of the originals; the map relabels a raw
    tuple's profiles along f and keeps everything else.
    """
    out = {}
    for slot in source_prod.seq.supported():
        for rep in source_prod.seq.slot(*slot):
            a, bs, kappa, x, ys = rep
            image_raw = (
                _map_profile(f, a),
                tuple(_map_profile(f, b) for b in bs),
                kappa, x, ys,
            )
            out[(slot, rep)] = target_prod.raw_to_rep[image_raw]
    return out


def pullback_unit_map(f: Mapping, source_colors) -> dict:
    """The unit structure map I_C -> f* I_D on slots ((t), t)."""
    unit_c = circle_unit(source_colors)
    return {
        ((t,), t): ("1", "1") for t in unit_c.colors
    }


@dataclass
class LeftKan:
    """Left Kan extension along a color map, with unit/counit helpers.

    Classes at a slot (d, s) are represented by raw tuples (c, t, lam, x)
    with f(t) = s, x in X(c; t) and lam a permutation with f(c) lam = d,
    modulo the source action.
    """

    f: dict
    source: SymSeqSet
    seq: SymSeqSet
    raw_to_rep: dict
    members: dict

    def unit(self, c: Profile, t, x):
        """Component of X -> f* f_! X at an element."""
        return self.raw_to_rep[(c, t, perm.identity(len(c)), x)]


def left_kan(f: Mapping, X: SymSeqSet, target_colors) -> LeftKan:
    """Colimit formula for the left adjoint of the pullback."""
    target_colors = tuple(sorted(target_colors))
    raws_by_slot: dict = {}
    for (c, t) in X.supported():
        fc = _map_profile(f, c)
        for lam in perm.all_perms(len(c)):
            d = perm.act_right(fc, lam)
            bucket = raws_by_slot.setdefault((d, f[t]), [])
            for x in X.slot(c, t):
                bucket.append((c, t, lam, x))

    uf = _UnionFind()
    for raws in raws_by_slot.values():
        for raw in raws:
            uf.add(raw)
    for raws in raws_by_slot.values():
        for raw in raws:
            c, t, lam, x = raw
            for s in perm.adjacent_transpositions(len(c)):
                other = (
                    perm.act_right(c, s), t,
                    perm.compose(perm.inverse(s), lam),
                    X.act(c, t, x, s),
                )
                uf.union(raw, other)

    def key(raw):
        c, t, lam, x = raw
        return (c, t, lam, X.index(c, t, x))

    raw_to_rep: dict = {}
    members: dict = {}
    slots: dict = {}
    for slot, raws in sorted(raws_by_slot.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
        groups: dict = {}
        for raw in raws:
            groups.setdefault(uf.find(raw), []).append(raw)
        reps = []
        for group in groups.values():
            group = sorted(set(group), key=key)
            rep = group[0]
            reps.append(rep)
            members[rep] = tuple(group)
            for raw in group:
                raw_to_rep[raw] = rep
        reps.sort(key=key)
        slots[slot] = tuple(reps)

    def act(d, s, e, sg):
        c, t, lam, x = e
        return raw_to_rep[(c, t, perm.compose(lam, sg), x)]

    seq = SymSeqSet(target_colors, slots, act)
    return LeftKan(dict(f), X, seq, raw_to_rep, members)


def kan_counit(lan_of_pullback: LeftKan, Y: SymSeqSet, f: Mapping, raw):
    """Counit f_! f* Y -> Y evaluated on one raw tuple."""
    c, t, lam, y = raw
    return Y.act(_map_profile(f, c), f[t], y, lam)


def check_adjunction_triangles(f: Mapping, X: SymSeqSet, Y: SymSeqSet,
                               source_colors, target_colors):
    """Element-wise triangle identities for (left Kan) -| (pullback).

    Checks, additionally, that the counit is constant on classes (well
    defined on the quotient).
    """
    from .reporting import Report

    rep = Report("kan-triangles")
    lan = left_kan(f, X, target_colors)
    for (d, s) in lan.seq.supported():
        for xi in lan.seq.slot(d, s):
            c, t, lam, x = xi
            rep.tick("triangle-lan")
            composite = lan.seq.act(
                _map_profile(f, c), f[t], lan.unit(c, t, x), lam
            )
            if composite != xi:
                rep.fail("triangle-lan", f"{d};{s}", f"{composite} != {xi}")
                return rep

    fY = pullback(f, Y, source_colors)
    lan_fY = left_kan(f, fY, target_colors)
    for rep_raw, group in sorted(lan_fY.members.items(), key=str):
        values = {kan_counit(lan_fY, Y, f, raw) for raw in group}
        rep.tick("counit-welldefined")
        if len(values) != 1:
            rep.fail("counit-welldefined", str(rep_raw), f"values {sorted(map(str, values))}")
            return rep
    for (c, t) in fY.supported():
        for y in fY.slot(c, t):
            rep.tick("triangle-pullback")
            eta = lan_fY.unit(c, t, y)
            value = kan_counit(lan_fY, Y, f, eta)
            if value != y:
                rep.fail("triangle-pullback", f"{c};{t}", f"{value} != {y}")
                return rep
    return rep


def dump_lines(seq: SymSeqSet, with_action: bool = True) -> list:
    """Deterministic text dump: slots, elements, generator action table."""
    out = []
    for (c, t) in seq.supported():
        elems = seq.slot(c, t)
        out.append(f"slot {t} <- ({','.join(c)}) : {len(elems)} element(s)")
        for i, e in enumerate(elems):
            out.append(f"  [{i}] {format_element(e)}")
        if with_action and len(c) >= 2:
            for s in perm.adjacent_transpositions(len(c)):
                for i, e in enumerate(elems):
                    img = seq.act(c, t, e, s)
                    c2 = perm.act_right(c, s)
                    j = seq.slot(c2, t).index(img)
                    out.append(f"  act {s}: [{i}] -> ({','.join(c2)})[{j}]")
    return out


def format_element(e) -> str:
    """Compact stable rendering for dump output."""
    if isinstance(e, tuple) and len(e) == 5 and isinstance(e[1], tuple):
        a, bs, kappa, x, ys = e
        inner = ", ".join(format_element(y) for y in ys)
        return (
            f"[a=({','.join(a)}); k={kappa}; x={format_element(x)}; ys=({inner})]"
        )
    return str(e)
