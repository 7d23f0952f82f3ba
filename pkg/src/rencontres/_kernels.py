"""Enumeration kernels for the brute-force oracle.

``tally_joint(n)`` walks every permutation g of {0..n-1}, inverts it
explicitly and counts pairs ``(fix(g), fix(g^-1))``. The numba path splits
S_n into the n contiguous lexicographic blocks sharing a first entry and
tallies them in parallel; per-block tallies merge by integer addition, so
the result does not depend on scheduling.

Set ``RENCONTRES_DISABLE_NUMBA=1`` to force the pure-numpy path.
"""

from __future__ import annotations

import os

import numpy as np

_FALSY = {"", "0", "false", "no", "off"}

try:
    import numba
    from numba import njit, prange
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None
    prange = range
else:
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # skip the TBB probe, which warns on older system TBB builds
        numba.config.THREADING_LAYER = "workqueue"

HAVE_NUMBA = njit is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("RENCONTRES_DISABLE_NUMBA", "").strip().lower() in _FALSY
BACKEND = "numba" if USE_NUMBA else "numpy"


def _tally_blocks_py(n):
    out = np.zeros((n, n + 1, n + 1), dtype=np.int64)
    for v in prange(n):
        perm = np.empty(n, dtype=np.int64)
        inv = np.empty(n, dtype=np.int64)
        perm[0] = v
        pos = 1
        for u in range(n):
            if u != v:
                perm[pos] = u
                pos += 1
        while True:
            fp = 0
            for j in range(n):
                if perm[j] == j:
                    fp += 1
                inv[perm[j]] = j
            fi = 0
            for j in range(n):
                if inv[j] == j:
                    fi += 1
            out[v, fp, fi] += 1
            # next permutation of perm[1:], lexicographic
            i = n - 2
            while i >= 1 and perm[i] >= perm[i + 1]:
                i -= 1
            if i < 1:
                break
            j = n - 1
            while perm[j] <= perm[i]:
                j -= 1
            perm[i], perm[j] = perm[j], perm[i]
            lo, hi = i + 1, n - 1
            while lo < hi:
                perm[lo], perm[hi] = perm[hi], perm[lo]
                lo += 1
                hi -= 1
    return out


if HAVE_NUMBA:
    _tally_blocks_nb = njit(parallel=True, cache=True, nogil=True)(_tally_blocks_py)
else:  # pragma: no cover
    _tally_blocks_nb = None


def tally_joint_numba(n: int) -> np.ndarray:
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not available")
    if n == 0:
        return np.ones((1, 1), dtype=np.int64)
    return _tally_blocks_nb(n).sum(axis=0)


def lex_permutations(m: int) -> np.ndarray:
    """All permutations of {0..m-1} as rows, in lexicographic order."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for size in range(1, m + 1):
        blocks = []
        for v in range(size):
            tail = perms + (perms >= v)
            head = np.full((perms.shape[0], 1), v, dtype=np.int8)
            blocks.append(np.hstack([head, tail.astype(np.int8)]))
        perms = np.vstack(blocks)
    return perms


def tally_joint_numpy(n: int) -> np.ndarray:
    if n == 0:
        return np.ones((1, 1), dtype=np.int64)
    ident = np.arange(n, dtype=np.int8)
    sub = lex_permutations(n - 1)
    counts = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    for v in range(n):
        block = np.hstack([np.full((sub.shape[0], 1), v, dtype=np.int8), (sub + (sub >= v)).astype(np.int8)])
        inv = np.empty_like(block)
        np.put_along_axis(inv, block.astype(np.intp), np.broadcast_to(ident, block.shape), axis=1)
        fp = (block == ident).sum(axis=1)
        fi = (inv == ident).sum(axis=1)
        counts += np.bincount(fp * (n + 1) + fi, minlength=counts.size)
    return counts.reshape(n + 1, n + 1)


def tally_joint(n: int) -> np.ndarray:
    """``out[a, b]`` = number of g in S_n with fix(g) = a and fix(g^-1) = b."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return tally_joint_numba(n) if USE_NUMBA else tally_joint_numpy(n)
