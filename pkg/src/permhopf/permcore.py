"""Permutations in one-line notation and the combinatorics built on them.

A permutation of degree ``n`` is a word containing each of ``1..n`` once.
The empty word is the degree-0 permutation (the unit index of SSym).
Composition follows ``compose(w, u)(i) == w(u(i))``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DegreeMismatch, InvalidPermutation


class Permutation(tuple):
    """Immutable one-line word; a ``tuple`` of ints with validation."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(int(x) for x in word)
        _validate_word(word)
        return tuple.__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def word(self) -> tuple:
        return tuple(self)

    def __repr__(self):
        return f"Permutation({format_permutation(self)!r})"

    def __str__(self):
        return format_permutation(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]


def _perm(word) -> Permutation:
    """Wrap a word already known to be a permutation."""
    return tuple.__new__(Permutation, word)


def _validate_word(word):
    n = len(word)
    seen = set()
    for pos, x in enumerate(word, 1):
        if x < 1 or x > n:
            raise InvalidPermutation(f"value {x} at position {pos} is outside 1..{n}")
        if x in seen:
            raise InvalidPermutation(f"duplicate value {x} at position {pos}")
        seen.add(x)


def make_permutation(word: Iterable[int]) -> Permutation:
    return Permutation(word)


def sort_key(u):
    """Canonical order: degree first, then lexicographic on the word."""
    return (len(u), tuple(u))


def identity(n: int) -> Permutation:
    return _perm(range(1, n + 1))


def longest(n: int) -> Permutation:
    return _perm(range(n, 0, -1))


UNIT = identity(0)


def inverse(u: Sequence[int]) -> Permutation:
    inv = [0] * len(u)
    for i, x in enumerate(u, 1):
        inv[x - 1] = i
    return _perm(inv)


def compose(w: Sequence[int], u: Sequence[int]) -> Permutation:
    """The product ``w u``, i.e. ``i -> w(u(i))``."""
    if len(w) != len(u):
        raise DegreeMismatch(f"cannot compose degrees {len(w)} and {len(u)}")
    return _perm(w[x - 1] for x in u)


def inversions(u: Sequence[int]) -> int:
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def standardize(seq: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct integers."""
    seq = tuple(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, pos in enumerate(order, 1):
        out[pos] = rank
    if len(set(seq)) != len(seq):
        dup = next(x for x in seq if seq.count(x) > 1)
        raise InvalidPermutation(f"cannot standardize: duplicate entry {dup}")
    return _perm(out)


# --------------------------------------------------------------------------
# descent sets


@dataclass(frozen=True)
class DescentSet:
    """A subset of ``{1, ..., n-1}`` together with its ambient degree ``n``."""

    members: tuple
    n: int

    def __post_init__(self):
        members = tuple(sorted(set(int(p) for p in self.members)))
        for p in members:
            if not 1 <= p <= self.n - 1:
                raise ValueError(f"position {p} is outside 1..{self.n - 1}")
        object.__setattr__(self, "members", members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return p in self.members

    def _same_degree(self, other):
        if not isinstance(other, DescentSet):
            return NotImplemented
        if other.n != self.n:
            raise DegreeMismatch(f"descent sets of degrees {self.n} and {other.n} are not comparable")
        return True

    def __le__(self, other):
        if self._same_degree(other) is NotImplemented:
            return NotImplemented
        return set(self.members) <= set(other.members)

    def __ge__(self, other):
        if self._same_degree(other) is NotImplemented:
            return NotImplemented
        return set(self.members) >= set(other.members)

    def issubset(self, other):
        return self <= other

    def __str__(self):
        return format_descent_set(self)


def descent_set(members, n) -> DescentSet:
    return DescentSet(tuple(members), n)


def descents(u: Sequence[int]) -> DescentSet:
    return DescentSet(tuple(p for p in range(1, len(u)) if u[p - 1] > u[p]), len(u))


def global_descents(u: Sequence[int]) -> DescentSet:
    # p is a global descent iff min(u_1..u_p) == n - p + 1
    n = len(u)
    out = []
    low = n + 1
    for p in range(1, n):
        low = min(low, u[p - 1])
        if low == n - p + 1:
            out.append(p)
    return DescentSet(tuple(out), n)


def subsets(n: int):
    """All subsets of [n-1], by size then lexicographically."""
    pos = range(1, n)
    for k in range(max(n, 1)):
        for c in itertools.combinations(pos, k):
            yield DescentSet(c, n)


def split_points(S: DescentSet) -> list:
    """``[0, p_1, ..., p_k, n]``: the block boundaries of ``S``."""
    return [0, *S.members, S.n]


# --------------------------------------------------------------------------
# products of permutations


def direct_sum(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """``u x v``: ``v`` shifted by ``deg u`` and appended to ``u``."""
    p = len(u)
    return _perm((*u, *(x + p for x in v)))


def restrict(v: Sequence[int], S: DescentSet) -> Permutation:
    """Standardize each block of ``v`` cut at ``S`` and take the direct sum."""
    if S.n != len(v):
        raise DegreeMismatch(f"subset of degree {S.n} used with a permutation of degree {len(v)}")
    cuts = split_points(S)
    out = []
    for a, b in zip(cuts, cuts[1:]):
        out.extend(x + a for x in standardize(v[a:b]))
    return _perm(out)


@lru_cache(maxsize=None)
def grassmannians(p: int, q: int) -> tuple:
    """Sh(p, q): permutations of degree p+q with descents only at ``p``.

    Returned as a tuple in canonical (lexicographic) order.
    """
    n = p + q
    out = []
    for first in itertools.combinations(range(1, n + 1), p):
        rest = sorted(set(range(1, n + 1)) - set(first))
        out.append(_perm((*first, *rest)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _shuffles_of_blocks(sizes: tuple) -> tuple:
    out = []

    def fill(i, remaining, word):
        if i == len(sizes) - 1:
            out.append(_perm(word + tuple(sorted(remaining))))
            return
        for c in itertools.combinations(sorted(remaining), sizes[i]):
            fill(i + 1, remaining - set(c), word + c)

    fill(0, frozenset(range(1, sum(sizes) + 1)), ())
    return tuple(sorted(out))


def grassmannians_of(S: DescentSet) -> tuple:
    """Sh(S): permutations whose descent set is contained in ``S``."""
    cuts = split_points(S)
    return _shuffles_of_blocks(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def is_grassmannian(zeta: Sequence[int], p: int) -> bool:
    return all(zeta[i - 1] < zeta[i] for i in range(1, len(zeta)) if i != p)


def rho(zeta: Sequence[int], u: Sequence[int], v: Sequence[int]) -> Permutation:
    """``(u x v) zeta^{-1}``: the vertex of facet ``zeta`` labelled ``(u, v)``."""
    p, q = len(u), len(v)
    if len(zeta) != p + q or not is_grassmannian(zeta, p):
        raise InvalidPermutation(f"{format_permutation(zeta)} is not in Sh({p},{q})")
    return compose(direct_sum(u, v), inverse(zeta))


# --------------------------------------------------------------------------
# text syntax


def format_permutation(u: Sequence[int]) -> str:
    if len(u) <= 9:
        return "".join(str(x) for x in u)
    return "[" + ",".join(str(x) for x in u) + "]"


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise InvalidPermutation(f"unterminated permutation list {text!r}")
        body = text[1:-1].strip()
        return Permutation(int(x) for x in body.split(",")) if body else UNIT
    if not re.fullmatch(r"\d*", text):
        raise InvalidPermutation(f"bad permutation syntax {text!r}")
    return Permutation(int(c) for c in text)


def format_descent_set(S: DescentSet) -> str:
    return "{" + ",".join(str(p) for p in S.members) + "}@" + str(S.n)


_DESCENT_RE = re.compile(r"\{\s*([\d\s,]*)\}\s*@\s*(\d+)")


def parse_descent_set(text: str) -> DescentSet:
    m = _DESCENT_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad descent-set syntax {text!r} (expected e.g. '{{2,3}}@5')")
    body = m.group(1).strip()
    members = [int(x) for x in body.split(",")] if body else []
    return DescentSet(tuple(members), int(m.group(2)))
