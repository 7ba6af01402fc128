"""Exact permutation calculus on one-line images.

A permutation of degree n is a tuple ``(p(1), ..., p(n))`` of the integers
1..n (1-based one-line notation).  Degree 0 is allowed: the empty tuple is
the unique element of the symmetric group on zero letters.

Conventions used throughout the package:

- ``compose(p, q)`` is the function composition ``i -> p(q(i))``.
- Sequences carry a *right* action: ``act_right(c, s) = (c[s(1)], ..., c[s(n)])``,
  so that ``act_right(act_right(c, p), q) == act_right(c, compose(p, q))``.
- ``block_permutation(s, lengths)`` moves consecutive blocks: acting on the
  right of a sequence split into blocks ``Y_1 ... Y_m`` with
  ``len(Y_i) == lengths[i]`` it produces ``Y_{s(1)} Y_{s(2)} ... Y_{s(m)}``.

>>> compose((2, 3, 1), (2, 3, 1))
(3, 1, 2)
>>> act_right(('a', 'b', 'c'), order_reversal(3))
('c', 'b', 'a')
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _raw_permutations
from typing import Iterable, Sequence

Perm = tuple  # one-line images, 1-based


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def degree(p: Perm) -> int:
    return len(p)


def compose(p: Perm, q: Perm) -> Perm:
    """Composite ``i -> p(q(i))`` (q acts first)."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[j - 1] for j in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j - 1] = i + 1
    return tuple(inv)


def order_reversal(n: int) -> Perm:
    """The permutation ``i -> n + 1 - i``; squares to the identity."""
    return tuple(range(n, 0, -1))


def transposition(n: int, i: int) -> Perm:
    """Adjacent transposition swapping positions i and i+1 (1-based)."""
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def act_right(seq: Sequence, s: Perm) -> tuple:
    """Right action on labelled sequences: entry i of the result is ``seq[s(i)]``."""
    if len(seq) != len(s):
        raise ValueError(f"length mismatch: sequence {len(seq)}, permutation {len(s)}")
    return tuple(seq[j - 1] for j in s)


def block_sum(parts: Iterable[Perm]) -> Perm:
    """Direct sum: each part acts inside its own consecutive block.

    >>> block_sum([(2, 1), (1,)])
    (2, 1, 3)
    """
    out: list[int] = []
    offset = 0
    for p in parts:
        out.extend(offset + v for v in p)
        offset += len(p)
    return tuple(out)


def block_permutation(s: Perm, lengths: Sequence[int]) -> Perm:
    """Permutation moving blocks of the given lengths as ``s`` moves letters.

    Acting on the right of ``Y_1 ... Y_m`` (``len(Y_i) == lengths[i]``) it
    yields ``Y_{s(1)} ... Y_{s(m)}``.

    >>> block_permutation((2, 1), (2, 1))
    (3, 1, 2)
    >>> block_permutation((2, 1), (1, 1))
    (2, 1)
    """
    if len(s) != len(lengths):
        raise ValueError(f"arity mismatch: permutation {len(s)}, lengths {len(lengths)}")
    return _block_permutation_cached(s, tuple(lengths))


@lru_cache(maxsize=None)
def _block_permutation_cached(s: Perm, lengths: tuple) -> Perm:
    offsets = [0] * len(lengths)
    acc = 0
    for i, ln in enumerate(lengths):
        offsets[i] = acc
        acc += ln
    out: list[int] = []
    for k in s:
        base = offsets[k - 1]
        out.extend(range(base + 1, base + lengths[k - 1] + 1))
    return tuple(out)


def block_transposition(m: int, n: int) -> Perm:
    """Swap a leading block of length m past a trailing block of length n."""
    return block_permutation((2, 1), (m, n))


def substitution(s: Perm, parts: Sequence[Perm]) -> Perm:
    """Operadic substitution product of permutations.

    The one-stage permutation equivalent to: act with each part inside its
    block, then move the blocks as ``s`` moves letters.  Concretely this is
    ``block_permutation(s, lengths reindexed by s^-1)`` composed with the
    block sum of the parts.

    >>> substitution((2, 1), [(1,), (2, 1)])
    (3, 2, 1)
    """
    if len(s) != len(parts):
        raise ValueError(f"arity mismatch: permutation {len(s)}, parts {len(parts)}")
    return _substitution_cached(s, tuple(parts))


@lru_cache(maxsize=None)
def _substitution_cached(s: Perm, parts: tuple) -> Perm:
    inv = inverse(s)
    lengths = tuple(len(parts[inv[l] - 1]) for l in range(len(s)))
    return compose(block_permutation(s, lengths), block_sum(parts))


def all_perms(n: int) -> list[Perm]:
    """All degree-n permutations in lexicographic order."""
    return list(_raw_permutations(range(1, n + 1)))


def adjacent_transpositions(n: int) -> list[Perm]:
    """Coxeter generators of the degree-n symmetric group (empty for n < 2)."""
    return [transposition(n, i) for i in range(1, n)]
