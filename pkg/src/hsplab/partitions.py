"""Young diagrams: integer partitions, conjugation, hooks, and dimensions.

All counts and dimensions are exact Python integers; the hook-product
division in ``dimension`` is checked to be exact.  The canonical order on
partitions of n is reverse-lexicographic, i.e. (n) first and (1, ..., 1)
last, and it is used for every table and distribution in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


class Partition:
    """An integer partition (λ₁ ≥ λ₂ ≥ ... > 0), the shape of a Young diagram."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        self.parts = parts

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def label(self) -> str:
        return ",".join(str(x) for x in self.parts)

    def conjugate(self) -> "Partition":
        """Flip about the diagonal: row j of the result counts λᵢ ≥ j."""
        if not self.parts:
            return Partition(())
        return Partition(
            sum(1 for x in self.parts if x >= j) for j in range(1, self.parts[0] + 1)
        )

    def cells(self):
        """All cells (row, col), 1-indexed, row-major."""
        for r, width in enumerate(self.parts, start=1):
            for c in range(1, width + 1):
                yield r, c

    def hook_length(self, row: int, col: int) -> int:
        """Arm + leg + 1 for the 1-indexed cell (row, col)."""
        if not (1 <= row <= len(self.parts)) or not (1 <= col <= self.parts[row - 1]):
            raise ValueError(f"cell ({row}, {col}) outside diagram {self.parts}")
        arm = self.parts[row - 1] - col
        leg = self.conjugate().parts[col - 1] - row
        return arm + leg + 1

    def dimension(self) -> int:
        """Number of standard tableaux of this shape, by the hook length formula."""
        return _dimension(self.parts)


@lru_cache(maxsize=None)
def _dimension(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    n = sum(parts)
    conj = Partition(parts).conjugate().parts
    num = math.factorial(n)
    for r, width in enumerate(parts, start=1):
        for c in range(1, width + 1):
            hook = (width - c) + (conj[c - 1] - r) + 1
            q, rem = divmod(num, hook)
            if rem:
                # hook products always divide n!, but never divide blindly
                raise ArithmeticError(f"inexact hook division for {parts}")
            num = q
    return num


@lru_cache(maxsize=None)
def _partition_tuples(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order; length p(n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(t) for t in _partition_tuples(n, n if n else 1)]


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """The partition number p(n), by the pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def in_lambda_c(lam: Partition, c: Fraction) -> bool:
    """Whether the first row or first column has length at least (1 - c) n.

    The comparison is exact rational arithmetic so boundary cases do not
    depend on floating-point rounding.
    """
    c = Fraction(c)
    if not (0 < c < Fraction(1, 4)):
        raise ValueError(f"c must lie in (0, 1/4): {c}")
    n = lam.n
    threshold = (1 - c) * n
    first_row = lam.parts[0] if lam.parts else 0
    first_col = len(lam.parts)
    return first_row >= threshold or first_col >= threshold


def lambda_c_family(n: int, c: Fraction) -> list[Partition]:
    """The fat diagrams of size n, in canonical order."""
    return [lam for lam in enumerate_partitions(n) if in_lambda_c(lam, c)]


def max_dimension_partition(n: int) -> Partition:
    """The largest-dimension shape; ties break toward canonical order."""
    best = None
    best_d = -1
    for lam in enumerate_partitions(n):
        d = lam.dimension()
        if d > best_d:
            best, best_d = lam, d
    return best
