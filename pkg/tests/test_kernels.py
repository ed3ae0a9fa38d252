import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from permhopf import _kernels as K
from permhopf.orders import weak_order

pytestmark = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")

BACKENDS = {
    "numpy": (K.inversion_masks_np, K.lex_ranks_np, K.leq_rows_np, K.accumulate_exclusive_np, K.mobius_row_np),
}
if K.HAVE_NUMBA:
    BACKENDS["numba"] = (K.inversion_masks_nb, K.lex_ranks_nb, K.leq_rows_nb, K.accumulate_exclusive_nb, K.mobius_row_nb)


def _words(n):
    perms = list(itertools.permutations(range(1, n + 1)))
    return np.array(perms, dtype=np.int64).reshape(len(perms), n)


@pytest.mark.parametrize("backend", list(BACKENDS))
@pytest.mark.parametrize("n", range(0, 7))
def test_masks_and_ranks(backend, n):
    masks_fn, ranks_fn, *_ = BACKENDS[backend]
    words = _words(n)
    masks = masks_fn(words)
    for w, m in zip(words, masks):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        assert bin(int(m)).count("1") == inv
    assert list(ranks_fn(words)) == list(range(len(words)))


@pytest.mark.parametrize("n", range(1, 6))
def test_backends_agree(n):
    rng = np.random.default_rng(n)
    wo = weak_order(n)
    words = _words(n)
    results = {}
    for name, (masks_fn, ranks_fn, leq_fn, acc_fn, mob_fn) in BACKENDS.items():
        masks = masks_fn(words)
        rows = rng.integers(0, wo.size, size=5)
        bases = rng.integers(0, wo.size, size=4)
        blockers = K.pad_blockers([list(rng.integers(0, wo.size, size=k)) for k in (0, 1, 3, 2)])
        rng = np.random.default_rng(n)
        up = wo.upset(0)
        results[name] = (
            masks,
            ranks_fn(words[::-1]),
            leq_fn(masks, rows),
            acc_fn(masks, bases, blockers, np.zeros(wo.size, dtype=np.int64)),
            mob_fn(masks[up]),
        )
    ref = results["numpy"]
    for name, got in results.items():
        for a, b in zip(ref, got):
            assert np.array_equal(a, b), name


def test_accumulate_exclusive_semantics():
    wo = weak_order(3)
    bases = np.array([0, 0], dtype=np.int64)
    blockers = K.pad_blockers([[], [wo.size - 1]])
    for _, _, _, acc, _ in BACKENDS.values():
        out = acc(wo.masks, bases, blockers, np.zeros(wo.size, dtype=np.int64))
        # first row hits everything, second everything except the top
        assert list(out) == [2] * (wo.size - 1) + [1]


def test_mask_degree_limit():
    with pytest.raises(ValueError):
        K.inversion_masks_np(np.zeros((1, K.MAX_MASK_DEGREE + 1), dtype=np.int64))


def test_numpy_backend_end_to_end():
    code = (
        "from permhopf import _kernels, ssym;"
        "print(_kernels.BACKEND);"
        "print(ssym.m_product((1,2),(2,1)));"
        "print(ssym.antipode_m((3,4,1,2)))"
    )
    outputs = {}
    for flag in ("1", "0"):
        env = dict(os.environ, PERMHOPF_DISABLE_NUMBA=flag)
        outputs[flag] = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert outputs["1"].splitlines()[0] == "numpy"
    assert outputs["0"].splitlines()[0] == "numba"
    assert outputs["1"].splitlines()[1:] == outputs["0"].splitlines()[1:]
