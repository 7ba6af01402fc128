"""States, inner product spaces, representations, and the GNS construction.

All carriers are finite-dimensional spaces over Gaussian rationals with the
conjugation involution.  A state on a reversing star-monoid is a linear
functional ``omega`` with ``omega(star(a)) = conj(omega(a))``; the induced
pairing ``<a, b> = omega(star(a) . b)`` makes the carrier an inner product
space on which left multiplication is a star-representation.  No positivity
condition enters anywhere: conjugate symmetry is the whole content of the
inner-product axiom at this level of generality.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cvec import (
    GaussC, Matrix, Vector, ZERO,
    basis_vector, format_scalar, mat_conj_transpose, mat_vec, vec_conj,
)
from .reporting import Report
from .staralg import REVERSING, MonoidPresentation, check_star_monoid


@dataclass(frozen=True)
class StatePresentation:
    """Reversing star-monoid together with a linear functional on it."""

    algebra: MonoidPresentation
    omega: Vector  # row of coefficients against the basis

    def value(self, v: Vector) -> GaussC:
        return sum((self.omega[i] * v[i] for i in range(len(v))), ZERO)


@dataclass(frozen=True)
class InnerProductSpace:
    """Pairing <v, w> = conj(v)^T G w."""

    dim: int
    gram: Matrix

    def pairing(self, v: Vector, w: Vector) -> GaussC:
        cv = vec_conj(v)
        return sum(
            (cv[i] * self.gram[i][j] * w[j]
             for i in range(self.dim) for j in range(self.dim)),
            ZERO,
        )


def check_state(s: StatePresentation, check_algebra: bool = True) -> Report:
    """omega(star(a)) = conj(omega(a)) on every basis element."""
    rep = Report("state")
    if check_algebra:
        base = check_star_monoid(s.algebra, REVERSING)
        if not base.ok:
            rep.merge(base)
            return rep
    m = s.algebra
    for i in range(m.dim):
        rep.tick("star-compatibility")
        starred = m.star_of(basis_vector(m.dim, i))
        if s.value(starred) != s.omega[i].conj():
            rep.fail(
                "star-compatibility", str(m.elements[i]),
                f"omega(star) = {format_scalar(s.value(starred))}, "
                f"conj(omega) = {format_scalar(s.omega[i].conj())}",
            )
            return rep
    return rep


def check_inner_product(V: InnerProductSpace) -> Report:
    """Conjugate symmetry: the matrix equals its conjugate transpose."""
    rep = Report("inner-product")
    rep.tick("conjugate-symmetry")
    if V.gram != mat_conj_transpose(V.gram):
        rep.fail("conjugate-symmetry", "gram", "matrix is not conjugate-symmetric")
    return rep


def check_representation(A: MonoidPresentation, V: InnerProductSpace,
                         ell: tuple) -> Report:
    """Left-module laws and inner-product compatibility on basis triples.

    ``ell`` is one matrix per basis element of A (the action of that basis
    vector); the action of a general element extends linearly.  Checks
    ``ell(1) = id``, ``ell(a b) = ell(a) ell(b)``, and
    ``<v, a . w> = <star(a) . v, w>``.
    """
    rep = Report("representation")
    dim = V.dim

    def act(coeffs: Vector, v: Vector) -> Vector:
        out = tuple(ZERO for _ in range(dim))
        for i, z in enumerate(coeffs):
            if z.is_zero():
                continue
            out = tuple(
                out[r] + z * mat_vec(ell[i], v)[r] for r in range(dim)
            )
        return out

    for p in range(dim):
        rep.tick("unit-law")
        v = basis_vector(dim, p)
        if act(A.unit, v) != v:
            rep.fail("unit-law", f"v={p}", "unit does not act as identity")
            return rep
    for i, j in product(range(A.dim), repeat=2):
        prod_coeffs = A.mul[(i, j)]
        for p in range(dim):
            rep.tick("module-law")
            v = basis_vector(dim, p)
            two_stage = mat_vec(ell[i], mat_vec(ell[j], v))
            one_stage = act(prod_coeffs, v)
            if two_stage != one_stage:
                rep.fail(
                    "module-law",
                    f"({A.elements[i]}, {A.elements[j]}) at v={p}",
                    "ell(ab) != ell(a) ell(b)",
                )
                return rep
    for i in range(A.dim):
        a_star = A.star_of(basis_vector(A.dim, i))
        for p, q in product(range(dim), repeat=2):
            rep.tick("adjoint-law")
            v, w = basis_vector(dim, p), basis_vector(dim, q)
            lhs = V.pairing(v, mat_vec(ell[i], w))
            rhs = V.pairing(act(a_star, v), w)
            if lhs != rhs:
                rep.fail(
                    "adjoint-law",
                    f"a={A.elements[i]} v={p} w={q}",
                    f"<v, a.w> = {format_scalar(lhs)} != "
                    f"<a*.v, w> = {format_scalar(rhs)}",
                )
                return rep
    return rep


@dataclass(frozen=True)
class GnsResult:
    space: InnerProductSpace
    left_mult: tuple  # one matrix per basis element


def gns_construct(s: StatePresentation) -> GnsResult:
    """Inner product <a, b> = omega(star(a) b) and left multiplication.

    The carrier is the algebra itself; no quotient is taken.
    """
    m = s.algebra
    gram = tuple(
        tuple(
            s.value(m.multiply(m.star_of(basis_vector(m.dim, i)),
                               basis_vector(m.dim, j)))
            for j in range(m.dim)
        )
        for i in range(m.dim)
    )
    left = tuple(
        tuple(
            tuple(m.mul[(i, j)][r] for j in range(m.dim))
            for r in range(m.dim)
        )
        for i in range(m.dim)
    )
    # left[i] has entry (r, j) = coefficient r of e_i e_j: column j is e_i e_j
    return GnsResult(InnerProductSpace(m.dim, gram), left)


def check_gns(s: StatePresentation) -> Report:
    """State law, construction, conjugate symmetry, representation laws."""
    rep = Report("gns")
    st = check_state(s)
    rep.merge(st)
    if not rep.ok:
        return rep
    out = gns_construct(s)
    rep.merge(check_inner_product(out.space))
    if not rep.ok:
        return rep
    rep.merge(check_representation(s.algebra, out.space, out.left_mult))
    return rep


def check_state_family(F, cat, states: dict) -> Report:
    """Per-object states compatible with the functor: omega_t' o F(f) = omega_t.

    ``states[x]`` is a StatePresentation on the monoid at x.
    """
    rep = Report("state-family")
    for x in cat.objects:
        sub = check_state(states[x])
        if not sub.ok:
            rep.merge(sub)
            return rep
        rep.tick("objects")
    for f in sorted(cat.morphisms):
        src, tgt = cat.morphisms[f]
        for i in range(F.monoids[src].dim):
            rep.tick("compatibility")
            v = basis_vector(F.monoids[src].dim, i)
            lhs = states[tgt].value(F.apply(f, v))
            rhs = states[src].omega[i]
            if lhs != rhs:
                rep.fail("compatibility", f"{f} at basis {i}", "functional not preserved")
                return rep
    return rep


def pullback_state(F, cat, t: str, omega: Vector) -> dict:
    """Family omega_c = omega_t o F(unique morphism c -> t), when it exists."""
    states = {}
    for c in cat.objects:
        arrows = cat.hom(c, t)
        if len(arrows) != 1:
            raise ValueError(f"no unique morphism {c} -> {t}")
        f = arrows[0]
        mc = F.monoids[c]
        row = tuple(
            sum(
                (omega[r] * F.apply(f, basis_vector(mc.dim, i))[r]
                 for r in range(F.monoids[t].dim)),
                ZERO,
            )
            for i in range(mc.dim)
        )
        states[c] = StatePresentation(mc, row)
    return states
