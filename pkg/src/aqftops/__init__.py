"""Colored *-operads from finite orthogonal categories, verified exactly.

The package builds the operation sets of algebraic quantum field theory
operads over a finite orthogonal category, equips them with order-reversal
or identity *-involutions, realizes the algebra <-> orthogonal-commutative
functor correspondence in both directions, and checks every axiom with
exact (Gaussian-rational) arithmetic.
"""

from .aqft import (
    IDENTITY, REVERSE, algebra_from_functor, attach_star, build_aqft_operad,
    check_perp_commutativity, functor_from_algebra, slot_counts,
)
from .fincat import OrthCategory, orthogonal_closure, validate_category
from .gns import check_gns, check_state, gns_construct
from .operad import (
    check_algebra, check_monoid_formulation, check_operad_axioms, mutation_sweep,
)
from .staralg import (
    check_star_algebra, check_star_functor, check_star_monoid, check_star_object,
    check_star_operad,
)
from .symseq import circle_product, circle_unit, left_kan, pullback
from .textio import load_algebra, load_category, load_functor, load_state

__version__ = "0.1.0"

__all__ = [
    "IDENTITY", "REVERSE", "OrthCategory",
    "algebra_from_functor", "attach_star", "build_aqft_operad",
    "check_algebra", "check_gns", "check_monoid_formulation",
    "check_operad_axioms", "check_perp_commutativity", "check_star_algebra",
    "check_star_functor", "check_star_monoid", "check_star_object",
    "check_star_operad", "check_state", "circle_product", "circle_unit",
    "functor_from_algebra", "gns_construct", "left_kan", "load_algebra",
    "load_category", "load_functor", "load_state", "mutation_sweep",
    "orthogonal_closure", "pullback", "slot_counts", "validate_category",
]
