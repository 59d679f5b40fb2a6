"""Real orthogonal matrix models for the irreducibles of S_n.

Each shape gets the orthogonal representation on its standard Young
tableaux: the generator for the adjacent transposition swapping letters
k, k+1 acts on a tableau with diagonal entry 1/axial-distance and couples
it to the letter-swapped tableau with weight sqrt(1 - 1/dist^2).  All
entries are real, so the dual representation equals the representation
entrywise and tensor-square bookkeeping needs no conjugation.

Tableaux are ordered canonically: group by the row holding the largest
letter, bottom row first, recursively.  This fixes the basis once and for
all; cached generator files are bit-identical across runs.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import _kernels
from .characters import character, conjugacy_classes, tensor_square_multiplicity
from .partitions import Partition, enumerate_partitions
from .permutations import Permutation, adjacent_transposition_word

# group-order * block-dimension^2 cap for whole-group matrix stacks
_STACK_BUDGET = 50_000_000


def standard_tableaux(parts: tuple[int, ...]) -> tuple:
    """All standard Young tableaux of the given shape, canonically ordered.

    A tableau is a tuple of row tuples holding the letters 1..n.
    """
    if isinstance(parts, Partition):
        parts = parts.parts
    return _standard_tableaux(tuple(parts))


@lru_cache(maxsize=None)
def _standard_tableaux(parts: tuple[int, ...]) -> tuple:
    n = sum(parts)
    if n == 0:
        return ((),)
    k = len(parts)
    out = []
    for r in range(k - 1, -1, -1):
        if r + 1 < k and parts[r] == parts[r + 1]:
            continue  # cell not removable
        rest = list(parts)
        rest[r] -= 1
        if rest[r] == 0:
            rest.pop(r)
        for sub in _standard_tableaux(tuple(rest)):
            rows = [list(row) for row in sub]
            while len(rows) <= r:
                rows.append([])
            rows[r].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def _positions(tab) -> dict[int, tuple[int, int]]:
    pos = {}
    for r, row in enumerate(tab, start=1):
        for c, v in enumerate(row, start=1):
            pos[v] = (r, c)
    return pos


class RepBlock:
    """One irreducible as explicit orthogonal matrices over its tableaux.

    ``gens[k]`` realizes the adjacent transposition of points k, k+1
    (0-indexed), i.e. of letters k+1, k+2.  Immutable after construction;
    the matrix and projector caches are private lazy state.
    """

    def __init__(self, lam: Partition, gens: list[np.ndarray], tableaux: tuple):
        self.lam = lam
        self.gens = gens
        self.tableaux = tableaux
        self.d = len(tableaux)
        self._matrix_cache: dict[tuple[int, ...], np.ndarray] = {}
        self._stack: np.ndarray | None = None
        self._tensor_projectors: dict[Partition, "Projector"] | None = None

    @property
    def n(self) -> int:
        return self.lam.n

    def matrix(self, p: Permutation) -> np.ndarray:
        """The representing matrix of ``p``, via its adjacent-transposition word."""
        if p.n != self.n:
            raise ValueError(f"size mismatch: permutation of {p.n}, shape of {self.n}")
        cached = self._matrix_cache.get(p.images)
        if cached is not None:
            return cached
        m = np.eye(self.d)
        for k in adjacent_transposition_word(p):
            m = m @ self.gens[k]
        self._matrix_cache[p.images] = m
        return m


def build_rep(lam, cache_dir: str | None = None) -> RepBlock:
    """Construct the orthogonal representation for a shape.

    If ``cache_dir`` (or the HSPLAB_CACHE_DIR environment variable) is set,
    generator matrices are loaded from / stored to a binary cache keyed by
    (n, shape); the cache is purely a performance layer.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if cache_dir is None:
        cache_dir = os.environ.get("HSPLAB_CACHE_DIR") or None

    if cache_dir:
        cached = _load_generators(cache_dir, lam)
        if cached is not None:
            return RepBlock(lam, cached, standard_tableaux(lam.parts))

    tabs = standard_tableaux(lam.parts)
    n = lam.n
    index = {tab: i for i, tab in enumerate(tabs)}
    positions = [_positions(tab) for tab in tabs]
    gens = []
    for k in range(1, n):  # letters k, k+1
        m = np.zeros((len(tabs), len(tabs)))
        for i, tab in enumerate(tabs):
            r1, c1 = positions[i][k]
            r2, c2 = positions[i][k + 1]
            dist = (c2 - r2) - (c1 - r1)
            m[i, i] = 1.0 / dist
            if abs(dist) >= 2:
                j = index[_swap_letters(tab, k)]
                if j > i:
                    w = math.sqrt(1.0 - 1.0 / dist**2)
                    m[i, j] = m[j, i] = w
        gens.append(m)

    if cache_dir:
        _store_generators(cache_dir, lam, gens)
    return RepBlock(lam, gens, tabs)


def _swap_letters(tab, k: int):
    return tuple(
        tuple(k + 1 if v == k else k if v == k + 1 else v for v in row) for row in tab
    )


def rep_matrix(rep: RepBlock, p: Permutation) -> np.ndarray:
    return rep.matrix(p)


@lru_cache(maxsize=None)
def _decomposition_steps(n: int) -> np.ndarray:
    """(target, parent, generator) triples covering lexicographic S_n.

    Each permutation is reached from a parent with one fewer inversion by a
    right generator multiply; steps are sorted so parents come first.
    """
    perms = tuple(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    entries = []
    for gi, img in enumerate(perms):
        if gi == 0:
            continue
        inv = sum(
            1 for a in range(n) for b in range(a + 1, n) if img[a] > img[b]
        )
        j = next(j for j in range(n - 1) if img[j] > img[j + 1])
        parent = list(img)
        parent[j], parent[j + 1] = parent[j + 1], parent[j]
        entries.append((inv, gi, index[tuple(parent)], j))
    entries.sort()
    return np.array([[g, p, j] for _, g, p, j in entries], dtype=np.int64)


def rep_all(rep: RepBlock) -> np.ndarray:
    """Stack of representing matrices for all of S_n in lexicographic order."""
    if rep._stack is not None:
        return rep._stack
    n = rep.n
    size = math.factorial(n)
    if size * rep.d * rep.d > _STACK_BUDGET:
        raise ValueError(f"whole-group stack too large for n = {n}, d = {rep.d}")
    out = np.zeros((size, rep.d, rep.d))
    out[0] = np.eye(rep.d)
    if n > 1:
        gens = np.ascontiguousarray(np.stack(rep.gens))
        _kernels.word_chain(_decomposition_steps(n), gens, out)
    rep._stack = out
    return out


class Projector:
    """A symmetric idempotent with integer rank read off the trace."""

    def __init__(self, matrix: np.ndarray, atol: float = 1e-10, rank_tol: float = 1e-6):
        matrix = np.asarray(matrix, dtype=np.float64)
        if np.max(np.abs(matrix - matrix.T)) > atol:
            raise ValueError("projector is not symmetric")
        if np.max(np.abs(matrix @ matrix - matrix)) > atol:
            raise ValueError("projector is not idempotent")
        tr = float(np.trace(matrix))
        rank = round(tr)
        if abs(tr - rank) > rank_tol:
            raise ValueError(f"projector trace {tr} is not close to an integer")
        self.matrix = matrix
        self.rank = rank

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def subgroup_projector(rep: RepBlock, elements) -> Projector:
    """Average of the representing matrices over a subgroup."""
    elems = list(elements)
    _validate_subgroup(elems)
    acc = np.zeros((rep.d, rep.d))
    for h in elems:
        acc += rep.matrix(h)
    return Projector(acc / len(elems))


def _validate_subgroup(elems: list[Permutation]) -> None:
    group = set(elems)
    if len(group) != len(elems):
        raise ValueError("subgroup list contains duplicates")
    if not any(h.is_identity() for h in group):
        raise ValueError("subgroup must contain the identity")
    for a in group:
        if a.inverse() not in group:
            raise ValueError("subgroup not closed under inverse")
        for b in group:
            if a * b not in group:
                raise ValueError("subgroup not closed under products")


def involution_projector(rep: RepBlock, m: Permutation) -> Projector:
    """Projector (1 + ρ(m)) / 2 onto the +1 eigenspace of an involution."""
    if not m.is_involution():
        raise ValueError("element is not an involution")
    return Projector((np.eye(rep.d) + rep.matrix(m)) / 2.0)


@lru_cache(maxsize=None)
def _class_ids(n: int) -> tuple[np.ndarray, int]:
    classes = {c: i for i, c in enumerate(conjugacy_classes(n))}
    ids = np.empty(math.factorial(n), dtype=np.int64)
    for gi, img in enumerate(itertools.permutations(range(n))):
        ids[gi] = classes[Permutation(img).cycle_type()]
    return ids, len(classes)


def tensor_square_projectors(rep: RepBlock) -> dict[Partition, Projector]:
    """Isotypic projectors of ρ ⊗ ρ, keyed by constituent shape.

    Built by character averaging over per-class sums of kron(ρ(g), ρ(g));
    with a real orthogonal model the dual tensor factor needs no
    conjugation.  Ranks equal multiplicity times constituent dimension,
    distinct projectors are orthogonal and they sum to the identity.
    """
    if rep._tensor_projectors is not None:
        return rep._tensor_projectors
    n = rep.n
    mats = rep_all(rep)
    ids, n_classes = _class_ids(n)
    class_sums = _kernels.class_tensor_sums(mats, ids, n_classes)
    classes = conjugacy_classes(n)
    size = math.factorial(n)
    out: dict[Partition, Projector] = {}
    for mu in enumerate_partitions(n):
        mult = tensor_square_multiplicity(mu, rep.lam)
        if mult == 0:
            continue
        d_mu = mu.dimension()
        acc = np.zeros_like(class_sums[0])
        for ci, ctype in enumerate(classes):
            chi = character(mu, ctype)
            if chi:
                acc += chi * class_sums[ci]
        proj = Projector(acc * (d_mu / size), atol=1e-8)
        if proj.rank != mult * d_mu:
            raise ArithmeticError(
                f"isotypic rank {proj.rank} != multiplicity * dimension for {mu}"
            )
        out[mu] = proj
    rep._tensor_projectors = out
    return out


def fourier_block(rep: RepBlock, f) -> np.ndarray:
    """The Fourier coefficient sqrt(d/|G|) Σ_g f(g) ρ(g) of one block.

    ``f`` is an array over S_n in lexicographic order (or a dict keyed by
    ``Permutation``).  The normalization makes the full blocked transform
    unitary.
    """
    n = rep.n
    size = math.factorial(n)
    if isinstance(f, dict):
        arr = np.zeros(size, dtype=complex)
        from .permutations import permutation_index

        for p, v in f.items():
            arr[permutation_index(p)] = v
        f = arr
    f = np.asarray(f)
    if f.shape != (size,):
        raise ValueError(f"function must have one value per group element ({size})")
    mats = rep_all(rep)
    return math.sqrt(rep.d / size) * np.tensordot(f, mats, axes=([0], [0]))


def fourier_transform(n: int, f, reps: dict[Partition, RepBlock] | None = None):
    """All Fourier blocks of a function on S_n, keyed by shape."""
    if reps is None:
        reps = {lam: build_rep(lam) for lam in enumerate_partitions(n)}
    return {lam: fourier_block(rep, f) for lam, rep in reps.items()}


def _cache_path(cache_dir: str, lam: Partition) -> Path:
    name = f"yor_n{lam.n}_" + "-".join(str(x) for x in lam.parts) + ".bin"
    return Path(cache_dir) / name


def _store_generators(cache_dir: str, lam: Partition, gens: list[np.ndarray]) -> None:
    path = _cache_path(cache_dir, lam)
    path.parent.mkdir(parents=True, exist_ok=True)
    d = gens[0].shape[0] if gens else 1
    header = {
        "n": lam.n,
        "parts": list(lam.parts),
        "d": d,
        "generators": len(gens),
        "dtype": "<f8",
        "tableau_order": "largest-letter-bottom-up",
    }
    payload = b""
    if gens:
        payload = np.ascontiguousarray(np.stack(gens)).astype("<f8").tobytes()
    path.write_bytes(json.dumps(header, sort_keys=True).encode() + b"\n" + payload)


def _load_generators(cache_dir: str, lam: Partition) -> list[np.ndarray] | None:
    path = _cache_path(cache_dir, lam)
    if not path.exists():
        return None
    raw = path.read_bytes()
    nl = raw.index(b"\n")
    header = json.loads(raw[:nl].decode())
    if tuple(header["parts"]) != lam.parts or header["dtype"] != "<f8":
        return None
    count, d = header["generators"], header["d"]
    if count == 0:
        return []
    mats = np.frombuffer(raw[nl + 1 :], dtype="<f8").reshape(count, d, d)
    return [np.array(mats[i]) for i in range(count)]
