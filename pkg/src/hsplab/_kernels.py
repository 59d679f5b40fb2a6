"""Hot numeric kernels, numba-jitted with a pure-numpy fallback.

The two inner loops that dominate runtime are (a) accumulating per-class
sums of kron(m, m) over a stack of representation matrices, which feeds
the isotypic projectors of tensor squares, and (b) filling the stack of
matrices for a whole group by chained generator products.

The fallback is used automatically when numba is missing and can be forced
with ``HSPLAB_NO_NUMBA=1`` (see benchmarks/bench_kernels.py for a timing
comparison of the two paths).
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_FALLBACK = os.environ.get("HSPLAB_NO_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
    "on",
}

try:
    if _FORCE_FALLBACK:
        raise ImportError("numba disabled via HSPLAB_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    njit = None
    HAVE_NUMBA = False


def class_tensor_sums_numpy(mats: np.ndarray, class_ids: np.ndarray, n_classes: int) -> np.ndarray:
    """Per-class sums of kron(m, m) over a stack of d x d matrices.

    Slice c of the result is the sum of kron(mats[g], mats[g]) over all g
    with class_ids[g] == c, shaped (d*d, d*d).
    """
    _, d, _ = mats.shape
    out = np.zeros((n_classes, d * d, d * d))
    for c in range(n_classes):
        sel = mats[class_ids == c]
        if sel.shape[0] == 0:
            continue
        acc = np.einsum("gij,gkl->ikjl", sel, sel)
        out[c] = acc.reshape(d * d, d * d)
    return out


def word_chain_numpy(steps: np.ndarray, gens: np.ndarray, out: np.ndarray) -> np.ndarray:
    """Fill out[target] = out[parent] @ gens[k] for each (target, parent, k)."""
    for t, p, k in steps:
        np.matmul(out[p], gens[k], out=out[t])
    return out


if HAVE_NUMBA:

    @njit(cache=True)
    def _class_tensor_sums_jit(mats, class_ids, n_classes):  # pragma: no cover
        count, d, _ = mats.shape
        dd = d * d
        out = np.zeros((n_classes, dd, dd))
        for g in range(count):
            c = class_ids[g]
            a = mats[g]
            for i in range(d):
                for j in range(d):
                    aij = a[i, j]
                    if aij == 0.0:
                        continue
                    row = i * d
                    col = j * d
                    for k in range(d):
                        for l in range(d):
                            out[c, row + k, col + l] += aij * a[k, l]
        return out

    @njit(cache=True)
    def _word_chain_jit(steps, gens, out):  # pragma: no cover
        for s in range(steps.shape[0]):
            t = steps[s, 0]
            p = steps[s, 1]
            k = steps[s, 2]
            out[t] = np.dot(out[p], gens[k])
        return out

    def class_tensor_sums(mats, class_ids, n_classes):
        return _class_tensor_sums_jit(
            np.ascontiguousarray(mats, dtype=np.float64),
            np.ascontiguousarray(class_ids, dtype=np.int64),
            n_classes,
        )

    def word_chain(steps, gens, out):
        return _word_chain_jit(
            np.ascontiguousarray(steps, dtype=np.int64),
            np.ascontiguousarray(gens, dtype=np.float64),
            out,
        )

else:
    class_tensor_sums = class_tensor_sums_numpy
    word_chain = word_chain_numpy


def warmup() -> None:
    """Trigger jit compilation on tiny inputs so later timings are clean."""
    mats = np.stack([np.eye(2), -np.eye(2)])
    class_tensor_sums(mats, np.array([0, 1], dtype=np.int64), 2)
    out = np.zeros((2, 2, 2))
    out[0] = np.eye(2)
    word_chain(np.array([[1, 0, 0]], dtype=np.int64), mats, out)
