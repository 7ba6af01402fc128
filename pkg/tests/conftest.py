"""Shared fixtures: the bundled orthogonal categories and test algebras."""
import pytest

from aqftops import fincat
from aqftops.cvec import gauss, mat_identity
from aqftops.staralg import FunctorToMon, MonoidPresentation

Z = gauss(0)
ONE = gauss(1)


def terminal_category(full_orth: bool) -> fincat.OrthCategory:
    cat = fincat.validate_category(["P"], {}, {})
    if full_orth:
        return cat.with_orth(fincat.orthogonal_closure(cat, [("id_P", "id_P")]))
    return cat


def arrow_category(with_orth: bool) -> fincat.OrthCategory:
    cat = fincat.validate_category(["x", "y"], {"g": ("x", "y")}, {})
    if with_orth:
        return cat.with_orth(fincat.orthogonal_closure(cat, [("g", "g")]))
    return cat


def square_category() -> fincat.OrthCategory:
    # all non-identity pairs over the terminal corner are orthogonal
    morphs = {
        "ab": ("a", "b"), "ac": ("a", "c"),
        "bd": ("b", "d"), "cd": ("c", "d"), "ad": ("a", "d"),
    }
    comp = {("ab", "bd"): "ad", ("ac", "cd"): "ad"}
    cat = fincat.validate_category(["a", "b", "c", "d"], morphs, comp)
    gens = [("bd", "cd"), ("bd", "bd"), ("cd", "cd"),
            ("ad", "ad"), ("ad", "bd"), ("ad", "cd")]
    return cat.with_orth(fincat.orthogonal_closure(cat, gens))


def poset3_category() -> fincat.OrthCategory:
    # partial relation: non-identity pairs at the top, nothing below
    morphs = {"p": ("x", "y"), "q": ("y", "z"), "r": ("x", "z")}
    comp = {("p", "q"): "r"}
    cat = fincat.validate_category(["x", "y", "z"], morphs, comp)
    gens = [("q", "q"), ("q", "r"), ("r", "r")]
    return cat.with_orth(fincat.orthogonal_closure(cat, gens))


@pytest.fixture(scope="session")
def categories() -> dict:
    return {
        "terminal_empty": terminal_category(False),
        "terminal_full": terminal_category(True),
        "arrow_empty": arrow_category(False),
        "arrow_orth": arrow_category(True),
        "square": square_category(),
        "poset3": poset3_category(),
    }


# --- algebra presentations over Gaussian rationals ---


def cfield() -> MonoidPresentation:
    return MonoidPresentation(
        name="C",
        elements=("1",),
        mul={(0, 0): (ONE,)},
        unit=(ONE,),
        star=mat_identity(1),
        mode="vec",
    )


def group_algebra_z2() -> MonoidPresentation:
    e0, e1 = (ONE, Z), (Z, ONE)
    return MonoidPresentation(
        name="C[Z2]",
        elements=("1", "g"),
        mul={(0, 0): e0, (0, 1): e1, (1, 0): e1, (1, 1): e0},
        unit=e0,
        star=mat_identity(2),
        mode="vec",
    )


def _mat2_mul() -> dict:
    # basis E11, E12, E21, E22; E_ij E_kl = delta_jk E_il
    def vec(*pos):
        out = [Z, Z, Z, Z]
        for p in pos:
            out[p] = ONE
        return tuple(out)

    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    mul = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            mul[(a, b)] = vec(idx[(i, l)]) if j == k else vec()
    return mul


def mat2(conjugation: str) -> MonoidPresentation:
    """2x2 matrices; star = entrywise conjugation or conjugate transpose."""
    if conjugation == "entrywise":
        smat = mat_identity(4)
    elif conjugation == "transpose":
        rows = [[Z] * 4 for _ in range(4)]
        for src, dst in ((0, 0), (1, 2), (2, 1), (3, 3)):
            rows[dst][src] = ONE
        smat = tuple(tuple(r) for r in rows)
    else:
        raise ValueError(conjugation)
    unit = (ONE, Z, Z, ONE)
    return MonoidPresentation(
        name=f"Mat2[{conjugation}]",
        elements=("E11", "E12", "E21", "E22"),
        mul=_mat2_mul(),
        unit=unit,
        star=smat,
        mode="vec",
    )


def one_object_functor(cat, monoid: MonoidPresentation) -> FunctorToMon:
    (obj,) = cat.objects
    return FunctorToMon(
        monoids={obj: monoid},
        maps={cat.identities[obj]: mat_identity(monoid.dim)},
    )
