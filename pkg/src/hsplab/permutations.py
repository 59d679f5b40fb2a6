"""Exact arithmetic for elements of symmetric groups.

Permutations are stored in one-line notation, 0-indexed: ``p.images[i]`` is
the image of ``i``.  The composition convention is fixed once for the whole
package:

    (p * q)(i) = p(q(i))

so the right factor acts first.  Cycle strings at CLI boundaries are
1-indexed; everything internal stays 0-indexed.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache, total_ordering


@total_ordering
class Permutation:
    """A permutation of {0, ..., n-1} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @staticmethod
    def from_cycles(n: int, cycles) -> "Permutation":
        """Build from 0-indexed disjoint cycles, e.g. ``[(0, 1), (2, 3)]``."""
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            if any(v in seen for v in cyc):
                raise ValueError("cycles are not disjoint")
            seen.update(cyc)
            for i, v in enumerate(cyc):
                images[v] = cyc[(i + 1) % len(cyc)]
        return Permutation(images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, sorted by it."""
        out = []
        seen = [False] * self.n
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths, sorted descending; fixed points count as 1s."""
        lengths = [len(c) for c in self.cycles(include_fixed=True)]
        return tuple(sorted(lengths, reverse=True))

    def support(self) -> int:
        """Number of non-fixed points."""
        return sum(1 for i, v in enumerate(self.images) if v != i)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def is_involution(self) -> bool:
        return all(self.images[v] == i for i, v in enumerate(self.images))

    def one_indexed(self) -> list[int]:
        return [v + 1 for v in self.images]

    def cycle_string(self) -> str:
        """1-indexed cycle notation, e.g. ``(1 2)(3 4)``; identity is ``()``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(v + 1) for v in c) + ")" for c in cycs)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product p * q with q acting first: (p * q)(i) = p(q(i))."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    pi = p.images
    return Permutation(pi[j] for j in q.images)


@lru_cache(maxsize=None)
def _all_images(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(n)))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic one-line order (identity first)."""
    return [Permutation(img) for img in _all_images(n)]


def permutation_index(p: Permutation) -> int:
    """Lexicographic rank of ``p`` among all permutations of the same size."""
    rank = 0
    avail = list(range(p.n))
    for i, v in enumerate(p.images):
        k = avail.index(v)
        rank += k * math.factorial(p.n - 1 - i)
        avail.pop(k)
    return rank


def matching_class(n: int) -> list[Permutation]:
    """All fixed-point-free involutions of S_n, i.e. the perfect matchings.

    There are (n-1)!! of them.  Deterministic order: the smallest unmatched
    point is paired with each larger unmatched point in increasing order,
    recursively, so seeded sweeps are reproducible.
    """
    if n % 2 != 0 or n < 2:
        raise ValueError("matching class undefined for odd n")
    out: list[Permutation] = []
    images = list(range(n))

    def pair(remaining: list[int]) -> None:
        if not remaining:
            out.append(Permutation(images))
            return
        a = remaining[0]
        for idx in range(1, len(remaining)):
            b = remaining[idx]
            images[a], images[b] = b, a
            pair(remaining[1:idx] + remaining[idx + 1 :])
            images[a], images[b] = a, b

    pair(list(range(n)))
    return out


def young_subgroup_embed(a: Permutation, b: Permutation) -> Permutation:
    """Embed (a, b) into S_{2n}: a acts on {0..n-1}, b on {n..2n-1} shifted."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    n = a.n
    return Permutation(list(a.images) + [n + v for v in b.images])


def adjacent_transposition_word(p: Permutation) -> tuple[int, ...]:
    """Indices w with p = s_{w[0]} * s_{w[1]} * ... where s_k swaps k, k+1.

    Produced by bubble-sorting the one-line form, so the word is
    deterministic and has length equal to the inversion count.
    """
    a = list(p.images)
    applied = []
    changed = True
    while changed:
        changed = False
        for j in range(len(a) - 1):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                applied.append(j)
                changed = True
    return tuple(reversed(applied))


def random_permutation(n: int, rng) -> Permutation:
    return Permutation(int(x) for x in rng.permutation(n))
