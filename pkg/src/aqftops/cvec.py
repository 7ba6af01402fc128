"""Gaussian-rational complex scalars and exact linear algebra.

Scalars are ``a + b i`` with a, b rational, kept in canonical form by
``fractions.Fraction``.  Every comparison in the package is an exact
equality, so no tolerances appear anywhere.

Linear maps carry an ``antilinear`` flag: an antilinear map with matrix M
acts as ``x -> M . conj(x)``.  ``compose_maps(f, g)`` is the map
"f followed by g"; when g is antilinear, f's matrix entries are conjugated
before multiplying, and the antilinearity flags xor.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class GaussC:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __add__(self, other: "GaussC") -> "GaussC":
        return GaussC(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussC") -> "GaussC":
        return GaussC(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussC":
        return GaussC(-self.re, -self.im)

    def __mul__(self, other: "GaussC") -> "GaussC":
        return GaussC(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inv(self) -> "GaussC":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussC(self.re / n, -self.im / n)

    def __truediv__(self, other: "GaussC") -> "GaussC":
        return self * other.inv()

    def conj(self) -> "GaussC":
        return GaussC(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __repr__(self) -> str:
        return f"GaussC({format_scalar(self)!r})"


ZERO = GaussC(Fraction(0), Fraction(0))
ONE = GaussC(Fraction(1), Fraction(0))
I = GaussC(Fraction(0), Fraction(1))


def gauss(re: int | str | Fraction = 0, im: int | str | Fraction = 0) -> GaussC:
    return GaussC(Fraction(re), Fraction(im))


_TERM = re.compile(r"([+-]?[^+-]+)")


def parse_scalar(text: str) -> GaussC:
    """Parse ``a/b``, ``a/b+c/d i``, ``i``, ``-2i`` ... (whitespace-insensitive).

    >>> parse_scalar("3/2 - 2i") == gauss("3/2", -2)
    True
    >>> parse_scalar("i") == I
    True
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty scalar literal")
    re_part = Fraction(0)
    im_part = Fraction(0)
    for term in _TERM.findall(s):
        if term in ("+", "-"):
            raise ValueError(f"bad scalar literal: {text!r}")
        if term.endswith("i") or term.endswith("I"):
            body = term[:-1].rstrip("*")
            if body in ("", "+"):
                im_part += 1
            elif body == "-":
                im_part -= 1
            else:
                im_part += Fraction(body)
        else:
            re_part += Fraction(term)
    return GaussC(re_part, im_part)


def format_scalar(z: GaussC) -> str:
    """Canonical literal: inverse to parse_scalar on its image."""
    if z.im == 0:
        return str(z.re)
    if z.im == 1:
        itxt = "i"
    elif z.im == -1:
        itxt = "-i"
    else:
        itxt = f"{z.im}i"
    if z.re == 0:
        return itxt
    sep = "+" if not itxt.startswith("-") else ""
    return f"{z.re}{sep}{itxt}"


# --- matrices: tuples of row tuples of GaussC ---

Matrix = tuple
Vector = tuple


def mat(rows: Sequence[Sequence[GaussC]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_zero(rows: int, cols: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows))


def mat_conj(m: Matrix) -> Matrix:
    return tuple(tuple(z.conj() for z in row) for row in m)


def mat_transpose(m: Matrix) -> Matrix:
    if not m:
        return ()
    return tuple(tuple(m[i][j] for i in range(len(m))) for j in range(len(m[0])))


def mat_conj_transpose(m: Matrix) -> Matrix:
    return mat_conj(mat_transpose(m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a[0])} vs {len(b)}")
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO)
            for j in range(len(b[0]) if b else 0)
        )
        for i in range(len(a))
    )


def mat_vec(m: Matrix, v: Vector) -> Vector:
    if m and len(m[0]) != len(v):
        raise ValueError(f"dimension mismatch: {len(m[0])} vs {len(v)}")
    return tuple(sum((row[k] * v[k] for k in range(len(v))), ZERO) for row in m)


def vec_conj(v: Vector) -> Vector:
    return tuple(z.conj() for z in v)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(z: GaussC, v: Vector) -> Vector:
    return tuple(z * a for a in v)


def vec_zero(n: int) -> Vector:
    return tuple(ZERO for _ in range(n))


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product (basis order: left factor index is most significant)."""
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    return tuple(
        tuple(a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb))
        for i in range(ra * rb)
    )


def flip_matrix(m: int, n: int) -> Matrix:
    """Matrix of the braiding v (x) w -> w (x) v on basis vectors."""
    out = [[ZERO for _ in range(m * n)] for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            out[j * m + i][i * n + j] = ONE
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class LinMap:
    """Matrix with an antilinearity flag.

    A linear map acts as ``x -> M x``; an antilinear one as ``x -> M conj(x)``.
    """

    matrix: Matrix
    antilinear: bool = False

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def cols(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def apply(self, v: Vector) -> Vector:
        return mat_vec(self.matrix, vec_conj(v) if self.antilinear else v)


def compose_maps(f: LinMap, g: LinMap) -> LinMap:
    """The map "f followed by g" (f acts first).

    Coordinate rule: composing through a conjugate space conjugates the
    earlier matrix, so for antilinear g the entries of f are conjugated
    before multiplying.  Flags xor.
    """
    if g.cols != f.rows:
        raise ValueError(f"dimension mismatch: {g.cols} vs {f.rows}")
    fm = mat_conj(f.matrix) if g.antilinear else f.matrix
    return LinMap(mat_mul(g.matrix, fm), f.antilinear != g.antilinear)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product of two maps with equal antilinearity flags."""
    if f.antilinear != g.antilinear:
        raise ValueError("mixed antilinearity flags in tensor")
    return LinMap(kron(f.matrix, g.matrix), f.antilinear)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b
