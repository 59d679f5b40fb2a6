"""Measurement distributions for coset states.

Covers the distribution of representation names under weak sampling with a
hidden order-2 subgroup {1, m}, conditional distributions over measurement
frames, the natural distribution a frame induces for the trivial subgroup,
POVM symmetrization over the group algebra, and an end-to-end state-vector
oracle that Fourier-transforms explicit coset superpositions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import character, matching_type
from .partitions import Partition, enumerate_partitions
from .permutations import (
    Permutation,
    all_permutations,
    compose,
    permutation_index,
)
from .repmatrices import RepBlock, build_rep, involution_projector, rep_all


class Distribution:
    """Probabilities over an ordered tuple of outcome labels.

    ``exact`` optionally carries the same probabilities as rationals when
    the computation was exact.
    """

    def __init__(self, outcomes, probs, exact=None, atol: float = 1e-9):
        self.outcomes = tuple(outcomes)
        self.probs = np.asarray(probs, dtype=np.float64)
        self.exact = tuple(exact) if exact is not None else None
        if self.probs.shape != (len(self.outcomes),):
            raise ValueError("one probability per outcome required")
        if np.any(self.probs < -atol):
            raise ValueError("negative probability")
        if abs(float(self.probs.sum()) - 1.0) > atol:
            raise ValueError(f"probabilities sum to {self.probs.sum()}, not 1")

    def __len__(self) -> int:
        return len(self.outcomes)

    def as_dict(self) -> dict:
        return dict(zip(self.outcomes, self.probs))

    def __repr__(self) -> str:
        return f"Distribution({len(self)} outcomes)"


def _rank_fraction(lam: Partition, m_type) -> Fraction:
    # rank of the order-2 coset projector: (d + χ(m)) / 2
    return Fraction(lam.dimension() + character(lam, m_type), 2)


def weak_distribution(n: int, m: Permutation | None = None) -> Distribution:
    """Distribution of the representation name measured on a coset state.

    For the hidden subgroup {1, m} with m an involution the probability of
    a shape is d * |H| * rank((1 + ρ(m))/2) / n!; it depends on m only
    through its conjugacy class.  With m None or the identity this is the
    Plancherel distribution d² / n!.
    """
    shapes = enumerate_partitions(n)
    size = math.factorial(n)
    if m is None or m.is_identity():
        exact = [Fraction(lam.dimension() ** 2, size) for lam in shapes]
    else:
        if not m.is_involution():
            raise ValueError("hidden element must be an involution")
        ctype = m.cycle_type()
        exact = [
            Fraction(lam.dimension(), size) * 2 * _rank_fraction(lam, ctype)
            for lam in shapes
        ]
    return Distribution(shapes, [float(x) for x in exact], exact=exact)


@dataclass
class Frame:
    """Weighted family of unit vectors resolving the identity.

    ``vectors`` holds the frame vectors as columns; ``weights`` are the
    positive weights, summing to the block dimension.
    """

    lam: Partition
    vectors: np.ndarray
    weights: np.ndarray
    label: str = "frame"

    def __post_init__(self):
        self.vectors = np.asarray(self.vectors, dtype=np.float64)
        self.weights = np.asarray(self.weights, dtype=np.float64)
        self.validate()

    @property
    def k(self) -> int:
        return self.vectors.shape[1]

    @property
    def d(self) -> int:
        return self.vectors.shape[0]

    def validate(self, unit_atol: float = 1e-10, complete_atol: float = 1e-8) -> None:
        if self.weights.shape != (self.k,) or np.any(self.weights <= 0):
            raise ValueError("weights must be positive, one per vector")
        norms = np.linalg.norm(self.vectors, axis=0)
        if np.max(np.abs(norms - 1.0)) > unit_atol:
            raise ValueError("frame vectors must have unit norm")
        gram = (self.vectors * self.weights) @ self.vectors.T
        if np.max(np.abs(gram - np.eye(self.d))) > complete_atol:
            raise ValueError("frame does not resolve the identity")
        if abs(float(self.weights.sum()) - self.d) > complete_atol:
            raise ValueError("frame weights must sum to the dimension")


def yor_frame(rep: RepBlock) -> Frame:
    """The coordinate basis of the block as an orthonormal frame."""
    return Frame(rep.lam, np.eye(rep.d), np.ones(rep.d), label="yor")


def _haar_orthogonal(d: int, rng) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    return q * np.sign(np.diag(r))


def random_orthonormal_frame(rep: RepBlock, rng) -> Frame:
    return Frame(
        rep.lam,
        _haar_orthogonal(rep.d, rng),
        np.ones(rep.d),
        label="random-orthonormal",
    )


def overcomplete_frame(rep: RepBlock, rng) -> Frame:
    """Union of two random orthonormal bases, each vector at weight 1/2."""
    b1 = _haar_orthogonal(rep.d, rng)
    b2 = _haar_orthogonal(rep.d, rng)
    return Frame(
        rep.lam,
        np.hstack([b1, b2]),
        np.full(2 * rep.d, 0.5),
        label="overcomplete-2x",
    )


def build_frame(rep: RepBlock, spec: str, rng=None) -> Frame:
    if spec == "yor":
        return yor_frame(rep)
    if rng is None:
        raise ValueError(f"frame spec {spec!r} needs a seeded generator")
    if spec == "random-orthonormal":
        return random_orthonormal_frame(rep, rng)
    if spec == "overcomplete-2x":
        return overcomplete_frame(rep, rng)
    raise ValueError(f"unknown frame spec {spec!r}")


def natural_distribution(frame: Frame) -> Distribution:
    """Outcome distribution of a frame for the trivial subgroup: weight / d."""
    return Distribution(range(frame.k), frame.weights / frame.d)


def conditional_distribution(rep: RepBlock, frame: Frame, m: Permutation) -> Distribution:
    """Distribution over frame vectors given the block was observed.

    For the hidden subgroup {1, m} the probability of vector j is
    weight_j * ||P b_j||^2 / rank(P) with P = (1 + ρ(m)) / 2.  The identity
    recovers the natural distribution.
    """
    if frame.lam != rep.lam:
        raise ValueError("frame and representation shapes differ")
    if m.is_identity():
        return natural_distribution(frame)
    proj = involution_projector(rep, m)
    if proj.rank == 0:
        raise ValueError("projector has rank zero; the block has probability zero")
    projected = proj.matrix @ frame.vectors
    probs = frame.weights * np.einsum("ij,ij->j", projected, projected) / proj.rank
    return Distribution(range(frame.k), probs)


def left_translation_matrix(n: int, x: Permutation) -> np.ndarray:
    """Permutation matrix of left multiplication by x on the group algebra."""
    perms = all_permutations(n)
    size = len(perms)
    mat = np.zeros((size, size))
    for j, g in enumerate(perms):
        mat[permutation_index(compose(x, g)), j] = 1.0
    return mat


def symmetrize_povm(n: int, operators, atol: float = 1e-8) -> list[np.ndarray]:
    """Average each operator over conjugation by all left translations.

    The input must satisfy the completeness condition (operators summing to
    the identity).  The outputs commute with every left translation and
    give the same outcome probabilities on the coset-state mixture of any
    hidden subgroup as the originals.
    """
    operators = [np.asarray(op) for op in operators]
    size = math.factorial(n)
    total = sum(operators)
    if np.max(np.abs(total - np.eye(size))) > atol:
        raise ValueError("POVM completeness violated")
    perms = all_permutations(n)
    # conjugating by L_x permutes rows and columns by g -> x * g
    tables = []
    for x in perms:
        tables.append(np.array([permutation_index(compose(x, g)) for g in perms]))
    out = []
    for op in operators:
        acc = np.zeros_like(op)
        for idx in tables:
            acc += op[np.ix_(idx, idx)]
        out.append(acc / size)
    return out


def coset_state(n: int, c: Permutation, subgroup) -> np.ndarray:
    """Uniform superposition over the left coset c * H in the group algebra."""
    vec = np.zeros(math.factorial(n))
    members = list(subgroup)
    amp = 1.0 / math.sqrt(len(members))
    for h in members:
        vec[permutation_index(compose(c, h))] = amp
    return vec


def coset_mixture_probability(op: np.ndarray, n: int, subgroup, g: Permutation) -> float:
    """tr(op σ) where σ is the uniform mixture of coset states of H^g shifted by g.

    Random left cosets of the hidden conjugate subgroup appear as c H g for
    uniform c, so σ averages |cHg><cHg| over all c.
    """
    perms = all_permutations(n)
    total = 0.0
    for c in perms:
        vec = np.zeros(math.factorial(n), dtype=complex)
        amp = 1.0 / math.sqrt(len(list(subgroup)))
        for h in subgroup:
            vec[permutation_index(compose(compose(c, h), g))] = amp
        total += float(np.real(np.vdot(vec, op @ vec)))
    return total / len(perms)


class OracleDistribution:
    """Joint outcome probabilities of blocked Fourier sampling a coset mixture.

    ``blocks[lam][i, j]`` is the probability of observing row i and column
    j inside the block of shape lam.
    """

    def __init__(self, n: int, m: Permutation | None, blocks):
        self.n = n
        self.m = m
        self.blocks = blocks

    def partition_marginal(self) -> Distribution:
        shapes = list(self.blocks)
        return Distribution(shapes, [float(self.blocks[s].sum()) for s in shapes])

    def column_marginal(self, lam: Partition) -> Distribution:
        block = self.blocks[lam]
        cols = block.sum(axis=0)
        return Distribution(range(block.shape[1]), cols / cols.sum())

    def row_marginal(self, lam: Partition) -> Distribution:
        block = self.blocks[lam]
        rows = block.sum(axis=1)
        return Distribution(range(block.shape[0]), rows / rows.sum())

    def column_joint_rows(self) -> list[tuple[Partition, int, float]]:
        out = []
        for lam, block in self.blocks.items():
            for j, p in enumerate(block.sum(axis=0)):
                out.append((lam, j, float(p)))
        return out


def oracle_sample_distribution(n: int, m: Permutation | None = None) -> OracleDistribution:
    """Full two-register sampling oracle, exact at desk scale.

    Prepares every coset state of H = {1, m} once (the post-measurement
    mixed state is a uniform mixture over |G| / |H| coset vectors, so the
    quadratic-size joint state is never materialized), applies the blocked
    Fourier transform, and averages squared amplitudes over cosets.
    """
    if n > 5:
        raise ValueError("oracle is desk-scale only (n <= 5)")
    if m is None or m.is_identity():
        subgroup = [Permutation.identity(n)]
    else:
        if not m.is_involution():
            raise ValueError("hidden element must be an involution")
        subgroup = [Permutation.identity(n), m]

    perms = all_permutations(n)
    size = len(perms)
    member_indices = []
    seen = [False] * size
    for gi, g in enumerate(perms):
        if seen[gi]:
            continue
        idxs = [permutation_index(compose(g, h)) for h in subgroup]
        for i in idxs:
            seen[i] = True
        member_indices.append(idxs)

    amp = 1.0 / math.sqrt(len(subgroup))
    n_cosets = len(member_indices)
    blocks = {}
    for lam in enumerate_partitions(n):
        rep = build_rep(lam)
        stack = rep_all(rep)
        scale = math.sqrt(rep.d / size) * amp
        acc = np.zeros((rep.d, rep.d))
        for idxs in member_indices:
            coeff = scale * stack[idxs].sum(axis=0)
            acc += coeff**2
        blocks[lam] = acc / n_cosets
    return OracleDistribution(n, m, blocks)
