"""Array kernels over S_n, with permutations encoded as inversion bitmasks.

Bit ``pair_bit(i, j, n)`` of a mask is set when positions ``i < j`` form an
inversion.  Weak-order comparison is then mask containment:
``u <= v  iff  mask(u) & ~mask(v) == 0``.

Each kernel exists as a numba ``@njit`` function and as a pure numpy
function.  ``PERMHOPF_DISABLE_NUMBA=1`` (or a missing numba) selects the
numpy path; both stay importable for the benchmark and the agreement tests.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

# 64-bit masks hold n(n-1)/2 pair bits.
MAX_MASK_DEGREE = 11


def _env_disables_numba():
    return os.environ.get("PERMHOPF_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _env_disables_numba()
BACKEND = "numba" if USE_NUMBA else "numpy"


def pair_bit(i, j, n):
    return i * n - i * (i + 1) // 2 + (j - i - 1)


# --------------------------------------------------------------------------
# numpy implementations


def inversion_masks_np(words):
    words = np.asarray(words, dtype=np.int64)
    count, n = words.shape
    if n > MAX_MASK_DEGREE:
        raise ValueError(f"inversion masks support degree <= {MAX_MASK_DEGREE}")
    masks = np.zeros(count, dtype=np.uint64)
    for i in range(n):
        for j in range(i + 1, n):
            bit = np.uint64(1) << np.uint64(pair_bit(i, j, n))
            masks |= np.where(words[:, i] > words[:, j], bit, np.uint64(0))
    return masks


def leq_rows_np(masks, rows):
    rows = np.asarray(rows, dtype=np.int64)
    return (masks[rows][:, None] & ~masks[None, :]) == 0


def accumulate_exclusive_np(masks, bases, blockers, out):
    """out[w] += #{z : bases[z] <= w and no blockers[z, b] <= w}.

    ``blockers`` is padded with -1.
    """
    for z in range(bases.shape[0]):
        hit = (masks[bases[z]] & ~masks) == 0
        row = blockers[z]
        row = row[row >= 0]
        if row.size:
            hit &= ~((masks[row][:, None] & ~masks[None, :]) == 0).any(axis=0)
        out += hit
    return out


def mobius_row_np(sub_masks):
    """Moebius values mu(s_0, s_t) for an up-set listed in a linear extension.

    ``sub_masks[0]`` is the bottom element; every element of the list lies
    above it.
    """
    k = sub_masks.shape[0]
    mu = np.zeros(k, dtype=np.int64)
    if k == 0:
        return mu
    mu[0] = 1
    for t in range(1, k):
        below = (sub_masks[:t] & ~sub_masks[t]) == 0
        mu[t] = -mu[:t][below].sum()
    return mu


def lex_ranks_np(words):
    """Lexicographic rank in S_n of each row of ``words`` (Lehmer code)."""
    words = np.asarray(words, dtype=np.int64)
    count, n = words.shape
    ranks = np.zeros(count, dtype=np.int64)
    fact = 1
    for i in range(n - 1, -1, -1):
        smaller = (words[:, i + 1 :] < words[:, i : i + 1]).sum(axis=1)
        ranks += smaller * fact
        fact *= n - i
    return ranks


# --------------------------------------------------------------------------
# numba implementations

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _inversion_masks_nb(words):
        count, n = words.shape
        masks = np.zeros(count, dtype=np.uint64)
        for r in range(count):
            m = np.uint64(0)
            for i in range(n):
                for j in range(i + 1, n):
                    if words[r, i] > words[r, j]:
                        m |= np.uint64(1) << np.uint64(i * n - i * (i + 1) // 2 + (j - i - 1))
            masks[r] = m
        return masks

    def inversion_masks_nb(words):
        words = np.ascontiguousarray(words, dtype=np.int64)
        if words.shape[1] > MAX_MASK_DEGREE:
            raise ValueError(f"inversion masks support degree <= {MAX_MASK_DEGREE}")
        return _inversion_masks_nb(words)

    @numba.njit(cache=True)
    def _lex_ranks_nb(words):
        count, n = words.shape
        ranks = np.zeros(count, dtype=np.int64)
        for r in range(count):
            fact = 1
            acc = 0
            for i in range(n - 1, -1, -1):
                smaller = 0
                for j in range(i + 1, n):
                    if words[r, j] < words[r, i]:
                        smaller += 1
                acc += smaller * fact
                fact *= n - i
            ranks[r] = acc
        return ranks

    def lex_ranks_nb(words):
        return _lex_ranks_nb(np.ascontiguousarray(words, dtype=np.int64))

    @numba.njit(cache=True)
    def _leq_rows_nb(masks, rows):
        out = np.empty((rows.shape[0], masks.shape[0]), dtype=np.bool_)
        for r in range(rows.shape[0]):
            m = masks[rows[r]]
            for w in range(masks.shape[0]):
                out[r, w] = (m & ~masks[w]) == 0
        return out

    def leq_rows_nb(masks, rows):
        return _leq_rows_nb(masks, np.ascontiguousarray(rows, dtype=np.int64))

    @numba.njit(cache=True)
    def accumulate_exclusive_nb(masks, bases, blockers, out):
        nb = blockers.shape[1]
        for z in range(bases.shape[0]):
            m = masks[bases[z]]
            for w in range(masks.shape[0]):
                mw = ~masks[w]
                if (m & mw) != 0:
                    continue
                blocked = False
                for b in range(nb):
                    idx = blockers[z, b]
                    if idx < 0:
                        break
                    if (masks[idx] & mw) == 0:
                        blocked = True
                        break
                if not blocked:
                    out[w] += 1
        return out

    @numba.njit(cache=True)
    def mobius_row_nb(sub_masks):
        k = sub_masks.shape[0]
        mu = np.zeros(k, dtype=np.int64)
        if k == 0:
            return mu
        mu[0] = 1
        for t in range(1, k):
            mt = ~sub_masks[t]
            acc = 0
            for s in range(t):
                if (sub_masks[s] & mt) == 0:
                    acc += mu[s]
            mu[t] = -acc
        return mu


if USE_NUMBA:
    inversion_masks = inversion_masks_nb
    lex_ranks = lex_ranks_nb
    leq_rows = leq_rows_nb
    accumulate_exclusive = accumulate_exclusive_nb
    mobius_row = mobius_row_nb
else:
    inversion_masks = inversion_masks_np
    lex_ranks = lex_ranks_np
    leq_rows = leq_rows_np
    accumulate_exclusive = accumulate_exclusive_np
    mobius_row = mobius_row_np


def pad_blockers(lists):
    """Pack ragged index lists into a -1 padded int64 matrix."""
    width = max((len(b) for b in lists), default=0)
    out = np.full((len(lists), max(width, 1)), -1, dtype=np.int64)
    for z, b in enumerate(lists):
        out[z, : len(b)] = b
    return out
