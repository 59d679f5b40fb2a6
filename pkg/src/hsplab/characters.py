"""Exact irreducible characters of the symmetric group.

Values come from the signed border-strip recursion on Young diagrams,
carried out in arbitrary-precision integers and memoized on the pair
(shape, remaining cycle lengths).  Class functions and inner products are
exact rationals; characters here are always real.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, _dimension, enumerate_partitions


def _as_parts(lam) -> tuple[int, ...]:
    if isinstance(lam, Partition):
        return lam.parts
    return Partition(lam).parts


def _as_class(cls) -> tuple[int, ...]:
    if isinstance(cls, Partition):
        cls = cls.parts
    return tuple(sorted((int(x) for x in cls), reverse=True))


@lru_cache(maxsize=None)
def _strip_removals(parts: tuple[int, ...], t: int) -> tuple:
    """All ways to remove a border strip of length t: (rest, sign) pairs.

    Uses first-column hook lengths (beta numbers): removing a strip of
    length t moves one beta number down by t, and the sign is (-1) to the
    number of beta numbers jumped over.
    """
    k = len(parts)
    beta = [parts[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    out = []
    for i, b in enumerate(beta):
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for j, x in enumerate(beta) if j != i), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        newparts = tuple(
            v - (k - 1 - j) for j, v in enumerate(newbeta) if v - (k - 1 - j) > 0
        )
        out.append((newparts, -1 if height % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _character(parts: tuple[int, ...], cls: tuple[int, ...]) -> int:
    if not cls:
        return 1
    if all(x == 1 for x in cls):
        return _dimension(parts)
    t, rest = cls[0], cls[1:]
    total = 0
    for newparts, sign in _strip_removals(parts, t):
        total += sign * _character(newparts, rest)
    return total


def character(lam, cls) -> int:
    """χ^λ evaluated on the conjugacy class with the given cycle type."""
    parts = _as_parts(lam)
    ctype = _as_class(cls)
    if sum(parts) != sum(ctype):
        raise ValueError(f"size mismatch: |λ| = {sum(parts)}, |C| = {sum(ctype)}")
    return _character(parts, ctype)


def conjugacy_classes(n: int) -> list[tuple[int, ...]]:
    """Cycle types of S_n in canonical (reverse-lexicographic) order."""
    return [lam.parts for lam in enumerate_partitions(n)]


def class_size(cls) -> int:
    """Number of permutations with the given cycle type."""
    ctype = _as_class(cls)
    n = sum(ctype)
    z = 1
    mult: dict[int, int] = {}
    for k in ctype:
        mult[k] = mult.get(k, 0) + 1
    for k, m in mult.items():
        z *= k**m * math.factorial(m)
    return math.factorial(n) // z


def sign_of_class(cls) -> int:
    ctype = _as_class(cls)
    return -1 if (sum(ctype) - len(ctype)) % 2 else 1


def matching_type(n: int) -> tuple[int, ...]:
    """Cycle type of the fixed-point-free involutions, (2, 2, ..., 2)."""
    if n % 2 != 0 or n < 2:
        raise ValueError("matching class undefined for odd n")
    return (2,) * (n // 2)


def class_function_inner_product(n: int, f, g) -> Fraction:
    """⟨f, g⟩ = (1/n!) Σ_C |C| f(C) g(C) for real class functions f, g.

    ``f`` and ``g`` map cycle types to numbers (callables or dicts).
    """
    fv = f.__getitem__ if isinstance(f, dict) else f
    gv = g.__getitem__ if isinstance(g, dict) else g
    total = Fraction(0)
    for ctype in conjugacy_classes(n):
        total += class_size(ctype) * Fraction(fv(ctype)) * Fraction(gv(ctype))
    return total / math.factorial(n)


def character_inner_product(n: int, lam, mu) -> Fraction:
    lam, mu = _as_parts(lam), _as_parts(mu)
    return class_function_inner_product(
        n, lambda c: _character(lam, c), lambda c: _character(mu, c)
    )


def tensor_square_multiplicity(mu, lam) -> int:
    """Multiplicity of the mu-irreducible inside the tensor square of lam,
    i.e. ⟨χ^μ, (χ^λ)²⟩; a nonnegative integer."""
    mu_p, lam_p = _as_parts(mu), _as_parts(lam)
    if sum(mu_p) != sum(lam_p):
        raise ValueError(f"size mismatch: {sum(mu_p)} vs {sum(lam_p)}")
    n = sum(lam_p)
    val = class_function_inner_product(
        n, lambda c: _character(mu_p, c), lambda c: _character(lam_p, c) ** 2
    )
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(f"multiplicity not a nonnegative integer: {val}")
    return int(val)


def normalized_character(lam, cls) -> Fraction:
    """χ^λ(C) / d^λ as an exact rational; always within [-1, 1]."""
    parts = _as_parts(lam)
    return Fraction(character(parts, cls), _dimension(parts))


class CharacterTable:
    """Full table χ^λ(C) for one n, rows and columns in canonical order."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = enumerate_partitions(n)
        self.classes = conjugacy_classes(n)
        self.class_sizes = {c: class_size(c) for c in self.classes}
        self.values = {
            (lam.parts, c): _character(lam.parts, c)
            for lam in self.partitions
            for c in self.classes
        }

    def value(self, lam, cls) -> int:
        return self.values[(_as_parts(lam), _as_class(cls))]

    def row(self, lam) -> list[int]:
        parts = _as_parts(lam)
        return [self.values[(parts, c)] for c in self.classes]

    def csv_rows(self) -> list[list[str]]:
        header = ["lambda"] + [" ".join(str(x) for x in c) for c in self.classes]
        rows = [header]
        for lam in self.partitions:
            rows.append([lam.label()] + [str(v) for v in self.row(lam)])
        return rows
