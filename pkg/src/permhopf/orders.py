"""Weak order on S_n, the Boolean poset of compositions, and their Moebius functions.

Covers in the weak order swap the positions of two consecutive values
``k, k+1`` with ``k`` appearing first.  Each cover adds exactly one
inverted pair of positions, so ``u <= v`` exactly when the position-inversion
set of ``u`` is contained in that of ``v``; the cached tables below use that
characterisation through bitmasks.
"""

from __future__ import annotations

import itertools
import re
import threading
from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from ._config import check_degree
from .errors import DegreeMismatch, InvalidComposition
from .permcore import DescentSet, Permutation, _perm, sort_key


def _same_degree(u, v):
    if len(u) != len(v):
        raise DegreeMismatch(f"permutations of degrees {len(u)} and {len(v)} are not comparable")


# --------------------------------------------------------------------------
# per-degree cache


class WeakOrder:
    """Memo tables for the weak order on S_n.

    Permutations are indexed in lexicographic order.  Moebius rows are cached
    per source element; writes go through a lock so concurrent callers see
    the same values they would have computed themselves.
    """

    def __init__(self, n: int):
        self.n = n
        self.perms = tuple(_perm(w) for w in itertools.permutations(range(1, n + 1)))
        self.index = {u: i for i, u in enumerate(self.perms)}
        self.size = len(self.perms)
        words = np.array(self.perms, dtype=np.int64).reshape(self.size, n)
        self.masks = _kernels.inversion_masks(words)
        self.lengths = np.array([bin(int(m)).count("1") for m in self.masks], dtype=np.int64)
        # stable: ties broken by lexicographic index
        self.by_length = np.argsort(self.lengths, kind="stable")
        self._mobius = {}
        self._leq = None
        self._lock = threading.Lock()

    def leq(self, i: int, j: int) -> bool:
        return (int(self.masks[i]) & ~int(self.masks[j])) == 0

    def row(self, i: int) -> np.ndarray:
        """Boolean vector of ``{w : perms[i] <= w}``."""
        return _kernels.leq_rows(self.masks, np.array([i]))[0]

    def leq_matrix(self) -> np.ndarray:
        if self._leq is None:
            mat = _kernels.leq_rows(self.masks, np.arange(self.size))
            with self._lock:
                self._leq = mat
        return self._leq

    def upset(self, i: int) -> np.ndarray:
        """Indices above ``i``, in a linear extension (by length)."""
        above = self.row(i)
        return self.by_length[above[self.by_length]]

    def mobius_row(self, i: int) -> dict:
        """``{j: mu(perms[i], perms[j])}`` over the nonzero values."""
        cached = self._mobius.get(i)
        if cached is not None:
            return cached
        up = self.upset(i)
        mu = _kernels.mobius_row(self.masks[up])
        row = {int(j): int(m) for j, m in zip(up, mu) if m}
        with self._lock:
            self._mobius.setdefault(i, row)
        return self._mobius[i]


@lru_cache(maxsize=None)
def _weak_order(n):
    return WeakOrder(n)


def weak_order(n: int) -> WeakOrder:
    check_degree(n)
    return _weak_order(n)


def symmetric_group(n: int) -> tuple:
    """All of S_n in lexicographic order (subject to the degree guard)."""
    return weak_order(n).perms


# --------------------------------------------------------------------------
# weak order


def weak_covers_up(u: Sequence[int]) -> tuple:
    n = len(u)
    pos = [0] * (n + 1)
    for i, x in enumerate(u):
        pos[x] = i
    out = []
    for k in range(1, n):
        if pos[k] < pos[k + 1]:
            w = list(u)
            w[pos[k]], w[pos[k + 1]] = k + 1, k
            out.append(_perm(w))
    return tuple(sorted(out, key=sort_key))


def weak_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    _same_degree(u, v)
    n = len(u)
    return all(v[i] > v[j] for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def weak_interval(u: Sequence[int], v: Sequence[int]) -> tuple:
    """``[u, v]``, found by breadth-first search up from ``u`` inside ``{t <= v}``."""
    _same_degree(u, v)
    if not weak_leq(u, v):
        return ()
    u = _perm(u)
    seen = {u}
    queue = deque([u])
    while queue:
        t = queue.popleft()
        for s in weak_covers_up(t):
            if s not in seen and weak_leq(s, v):
                seen.add(s)
                queue.append(s)
    return tuple(sorted(seen, key=sort_key))


def weak_mobius(u: Sequence[int], v: Sequence[int]) -> int:
    _same_degree(u, v)
    wo = weak_order(len(u))
    return wo.mobius_row(wo.index[tuple(u)]).get(wo.index[tuple(v)], 0)


def z_of(S: DescentSet) -> Permutation:
    """The maximal permutation with descent set ``S``.

    Blocks (sizes from the composition of ``S``) are filled left to right with
    the largest unused values, increasing within each block.
    """
    top = S.n
    out = []
    for size in subset_to_composition(S):
        out.extend(range(top - size + 1, top + 1))
        top -= size
    return _perm(out)


# --------------------------------------------------------------------------
# compositions and the Boolean poset


class Composition(tuple):
    """Ordered tuple of positive parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts, 1):
            if x < 1:
                raise InvalidComposition(f"part {i} is {x}; parts must be positive")
        return tuple.__new__(cls, parts)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Composition({format_composition(self)})"

    def __str__(self):
        return format_composition(self)


def _comp(parts) -> Composition:
    return tuple.__new__(Composition, parts)


def composition_sort_key(alpha):
    return (sum(alpha), tuple(alpha))


def as_composition(x) -> Composition:
    """Accept a Composition, a DescentSet, or a plain sequence of parts."""
    if isinstance(x, DescentSet):
        return subset_to_composition(x)
    if isinstance(x, Composition):
        return x
    return Composition(x)


def subset_to_composition(S: DescentSet) -> Composition:
    cuts = [0, *S.members, S.n]
    return _comp(b - a for a, b in zip(cuts, cuts[1:]) if b > a)


def composition_to_subset(alpha: Sequence[int]) -> DescentSet:
    sums = list(itertools.accumulate(alpha))
    return DescentSet(tuple(sums[:-1]), sums[-1] if sums else 0)


def _same_weight(alpha, beta):
    if sum(alpha) != sum(beta):
        raise DegreeMismatch(f"compositions of {sum(alpha)} and {sum(beta)} are not comparable")


def refine_leq(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """``alpha <= beta`` iff I(alpha) is a subset of I(beta) (beta refines alpha)."""
    _same_weight(alpha, beta)
    return set(itertools.accumulate(alpha)) <= set(itertools.accumulate(beta))


def boolean_mobius(alpha: Sequence[int], beta: Sequence[int]) -> int:
    if not refine_leq(alpha, beta):
        return 0
    return -1 if (len(beta) - len(alpha)) % 2 else 1


def reverse(alpha: Sequence[int]) -> Composition:
    return _comp(reversed(tuple(alpha)))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    """All compositions of ``n`` in canonical (lexicographic) order."""
    if n == 0:
        return (_comp(()),)
    out = [_comp((first, *rest)) for first in range(1, n + 1) for rest in compositions(n - first)]
    return tuple(sorted(out))


def _from_cuts(cuts, n):
    cuts = [0, *sorted(cuts), n]
    return _comp(b - a for a, b in zip(cuts, cuts[1:]) if b > a)


def coarsenings(alpha: Sequence[int]) -> tuple:
    """All ``beta <= alpha``, i.e. merges of adjacent parts."""
    inner = list(itertools.accumulate(alpha))[:-1]
    n = sum(alpha)
    out = [_from_cuts(c, n) for k in range(len(inner) + 1) for c in itertools.combinations(inner, k)]
    return tuple(sorted(out))


def refinements(alpha: Sequence[int]) -> tuple:
    """All ``beta >= alpha``."""
    n = sum(alpha)
    fixed = set(itertools.accumulate(alpha)) - {n}
    free = [p for p in range(1, n) if p not in fixed]
    out = [_from_cuts(fixed | set(c), n) for k in range(len(free) + 1) for c in itertools.combinations(free, k)]
    return tuple(sorted(out))


def format_composition(alpha: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in alpha) + ")"


_COMP_RE = re.compile(r"\(\s*([\d\s,]*)\)")


def parse_composition(text: str) -> Composition:
    m = _COMP_RE.fullmatch(text.strip())
    if not m:
        raise InvalidComposition(f"bad composition syntax {text!r} (expected e.g. '(2,1)')")
    body = m.group(1).strip()
    return Composition(int(x) for x in body.split(",")) if body else _comp(())
