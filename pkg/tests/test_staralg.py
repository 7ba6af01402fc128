from aqftops.cvec import LinMap, gauss, mat_identity
from aqftops.staralg import (
    NONREVERSING, REVERSING, FunctorToMon, MonoidPresentation, StarObject,
    check_functor, check_monoid, check_star_functor, check_star_monoid,
    check_star_object,
)
from conftest import arrow_category, cfield, group_algebra_z2, mat2

Z = gauss(0)
ONE = gauss(1)
I = gauss(0, 1)


def test_star_object_set_mode():
    ident = StarObject(("a", "b"), {"a": "a", "b": "b"})
    assert check_star_object(ident).ok
    swap = StarObject(("a", "b"), {"a": "b", "b": "a"})
    assert check_star_object(swap).ok
    broken = StarObject(("a", "b", "c"), {"a": "b", "b": "c", "c": "a"})
    assert not check_star_object(broken).ok


def test_star_object_vec_mode():
    conj = StarObject(2, LinMap(mat_identity(2), antilinear=True))
    assert check_star_object(conj).ok
    diag = LinMap(((I, Z), (Z, ONE)), antilinear=True)
    assert check_star_object(StarObject(2, diag)).ok  # conj(S) S = identity
    bad = LinMap(((I, Z), (Z, I)), antilinear=False)
    assert not check_star_object(StarObject(2, bad)).ok


def test_check_monoid():
    for m in (cfield(), group_algebra_z2(), mat2("entrywise")):
        assert check_monoid(m).ok
    magma = MonoidPresentation(
        name="magma", elements=("e", "x", "y"),
        mul={
            ("e", "e"): "e", ("e", "x"): "x", ("e", "y"): "y",
            ("x", "e"): "x", ("y", "e"): "y",
            ("x", "x"): "y", ("x", "y"): "e", ("y", "x"): "x", ("y", "y"): "y",
        },
        unit="e", mode="set",
    )
    rep = check_monoid(magma)
    assert not rep.ok and rep.witnesses[0].family == "associativity"


def test_star_monoid_flavors_on_commutative_carriers():
    for m in (cfield(), group_algebra_z2()):
        assert check_star_monoid(m, NONREVERSING).ok
        assert check_star_monoid(m, REVERSING).ok


def test_star_monoid_discriminates_matrix_conjugations():
    entry = mat2("entrywise")
    trans = mat2("transpose")
    assert check_star_monoid(entry, NONREVERSING).ok
    rep = check_star_monoid(entry, REVERSING)
    assert not rep.ok and "E1" in rep.witnesses[0].location
    assert check_star_monoid(trans, REVERSING).ok
    assert not check_star_monoid(trans, NONREVERSING).ok


def test_star_monoid_conjugation_sensitive_constants():
    # x.x = i: coefficient conjugation is *not* a nonreversing involution
    m = MonoidPresentation(
        name="C[x]/(x^2-i)",
        elements=("1", "x"),
        mul={(0, 0): (ONE, Z), (0, 1): (Z, ONE), (1, 0): (Z, ONE), (1, 1): (I, Z)},
        unit=(ONE, Z),
        star=mat_identity(2),
        mode="vec",
    )
    assert check_monoid(m).ok
    assert not check_star_monoid(m, NONREVERSING).ok
    assert not check_star_monoid(m, REVERSING).ok


def _scalar_functor(cat):
    """x |-> C, y |-> Mat2, g |-> scalar embedding (lands in the center)."""
    emb = ((ONE,), (Z,), (Z,), (ONE,))
    return FunctorToMon(
        monoids={"x": cfield(), "y": mat2("transpose")},
        maps={"id_x": mat_identity(1), "id_y": mat_identity(4), "g": emb},
    )


def test_functor_validation():
    cat = arrow_category(False)
    F = _scalar_functor(cat)
    assert check_functor(F, cat).ok
    bad = FunctorToMon(
        monoids=F.monoids,
        maps={**F.maps, "g": ((ONE,), (ONE,), (Z,), (ONE,))},  # not unital? it is; breaks mult
    )
    assert not check_functor(bad, cat).ok


def test_star_functor():
    cat = arrow_category(False)
    F = _scalar_functor(cat)
    assert check_star_functor(F, cat).ok
    # replacing the target star with a non-intertwining one must fail
    skew = mat2("entrywise")
    G = FunctorToMon(
        monoids={"x": cfield(), "y": skew},
        maps=F.maps,
    )
    # scalars are fixed by both conjugations, so this still intertwines;
    # spoil the source star instead: multiply by i (not an involution either,
    # caught by the star-object check inside)
    twisted = MonoidPresentation(
        name="C-twisted", elements=("1",), mul={(0, 0): (ONE,)},
        unit=(ONE,), star=((I,),), mode="vec",
    )
    H = FunctorToMon(monoids={"x": twisted, "y": mat2("transpose")}, maps=F.maps)
    assert check_star_functor(G, cat).ok
    assert not check_star_functor(H, cat).ok


def test_star_functor_intertwine_witness():
    # g acts by the Hermitian matrix [[0, i], [-i, 0]] (squares to 1): the
    # image intertwines conjugate-transpose stars but not entrywise ones
    cat = arrow_category(False)
    emb = (
        (ONE, Z),
        (Z, I),
        (Z, gauss(0, -1)),
        (ONE, Z),
    )
    maps = {"id_x": mat_identity(2), "id_y": mat_identity(4), "g": emb}
    good = FunctorToMon(
        monoids={"x": group_algebra_z2(), "y": mat2("transpose")}, maps=maps
    )
    assert check_functor(good, cat).ok
    assert check_star_functor(good, cat).ok
    bad = FunctorToMon(
        monoids={"x": group_algebra_z2(), "y": mat2("entrywise")}, maps=maps
    )
    rep = check_star_functor(bad, cat)
    assert not rep.ok and rep.witnesses[0].family == "intertwine"
