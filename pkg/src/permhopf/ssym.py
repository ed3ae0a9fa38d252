"""The Hopf algebra of permutations in its fundamental (F) and monomial (M) bases.

The F basis multiplies by shuffling and splits by standardising prefixes and
suffixes.  ``M_u`` is the Moebius inversion of ``F`` over the weak order.  The
M-basis rules here are the closed combinatorial ones: splitting at global
descents, structure constants counting facets of the permutahedron, and the
two antipode formulas (signed subset counts on F, Grassmannian counts on M).
``SSYM_M_VIA_F`` carries the same structure computed by change of basis and
serves as the independent reference.

``x_from_y(u)`` returns the basis element ``x_u`` written in basis ``y``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import DegreeMismatch, InternalConsistencyError, SpaceMismatch
from .formal import (
    SSYM_F,
    SSYM_M,
    Element,
    HopfStructure,
    Tensor,
    _accumulate,
    extend_coproduct,
    extend_linear,
    extend_product,
    register,
)
from .orders import symmetric_group, weak_leq, weak_order
from .permcore import (
    UNIT,
    DescentSet,
    Permutation,
    compose,
    descents,
    direct_sum,
    global_descents,
    grassmannians,
    grassmannians_of,
    inverse,
    restrict,
    rho,
    standardize,
    subsets,
)


def _as_perm(u) -> Permutation:
    return u if isinstance(u, Permutation) else Permutation(u)


def F(u, coeff=1) -> Element:
    return Element.basis(SSYM_F, _as_perm(u), coeff)


def M(u, coeff=1) -> Element:
    return Element.basis(SSYM_M, _as_perm(u), coeff)


def _words(perms, n):
    return np.array(perms, dtype=np.int64).reshape(len(perms), n)


# --------------------------------------------------------------------------
# fundamental basis


@lru_cache(maxsize=None)
def _f_product(u, v):
    x = direct_sum(u, v)
    return Element._raw(SSYM_F, {compose(x, inverse(z)): 1 for z in grassmannians(len(u), len(v))})


def f_product(u, v) -> Element:
    """F_u F_v: one term ``(u x v) zeta^{-1}`` per Grassmannian ``zeta``."""
    return _f_product(_as_perm(u), _as_perm(v))


@lru_cache(maxsize=None)
def _f_coproduct(u):
    out = {}
    for p in range(len(u) + 1):
        _accumulate(out, (standardize(u[:p]), standardize(u[p:])), 1)
    return Tensor._raw((SSYM_F, SSYM_F), out)


def f_coproduct(u) -> Tensor:
    return _f_coproduct(_as_perm(u))


# --------------------------------------------------------------------------
# change of basis


@lru_cache(maxsize=None)
def _m_from_f(u):
    wo = weak_order(len(u))
    row = wo.mobius_row(wo.index[u])
    return Element._raw(SSYM_F, {wo.perms[j]: c for j, c in row.items()})


def m_from_f(u) -> Element:
    """M_u = sum over v >= u of mu(u, v) F_v."""
    return _m_from_f(_as_perm(u))


@lru_cache(maxsize=None)
def _f_from_m(u):
    wo = weak_order(len(u))
    return Element._raw(SSYM_M, {wo.perms[j]: 1 for j in wo.upset(wo.index[u])})


def f_from_m(u) -> Element:
    """F_u = sum over v >= u of M_v."""
    return _f_from_m(_as_perm(u))


def to_f(x: Element) -> Element:
    if x.space == SSYM_F:
        return x
    if x.space != SSYM_M:
        raise SpaceMismatch(f"expected an SSym element, got {x.space}")
    return extend_linear(_m_from_f, x, SSYM_F)


def to_m(x: Element) -> Element:
    if x.space == SSYM_M:
        return x
    if x.space != SSYM_F:
        raise SpaceMismatch(f"expected an SSym element, got {x.space}")
    by_degree = {}
    for u, c in x.items():
        by_degree.setdefault(len(u), []).append((u, c))
    out = {}
    for n, terms in by_degree.items():
        wo = weak_order(n)
        idx = np.array([wo.index[u] for u, _ in terms], dtype=np.int64)
        coeffs = [c for _, c in terms]
        small = max(abs(c) for c in coeffs) < 2**40
        dtype = np.int64 if small else object
        vec = np.array(coeffs, dtype=dtype) @ _kernels.leq_rows(wo.masks, idx).astype(dtype)
        for j in np.nonzero(vec)[0]:
            out[wo.perms[j]] = int(vec[j])
    return Element._raw(SSYM_M, out)


def to_basis(x: Element, basis: str) -> Element:
    return to_f(x) if basis == "F" else to_m(x)


# --------------------------------------------------------------------------
# monomial coproduct


@lru_cache(maxsize=None)
def _m_coproduct(u):
    n = len(u)
    out = {}
    for p in sorted({0, *global_descents(u).members, n}):
        _accumulate(out, (standardize(u[:p]), standardize(u[p:])), 1)
    return Tensor._raw((SSYM_M, SSYM_M), out)


def m_coproduct(u) -> Tensor:
    """Delta(M_u): split ``u`` only at 0, n and its global descents."""
    return _m_coproduct(_as_perm(u))


# --------------------------------------------------------------------------
# monomial product: facets of the permutahedron


class _Facets:
    """The facets of type (p, q): images of ``rho_zeta`` for ``zeta`` in Sh(p, q).

    A pair ``(u, v)`` in S_p x S_q is indexed ``iu * q! + iv``.  ``img[z, a]`` is
    the S_{p+q} index of ``rho_zeta(u, v)`` and ``pair_leq`` the componentwise
    weak order on pairs.
    """

    def __init__(self, p, q):
        self.p, self.q, self.n = p, q, p + q
        self.sp, self.sq, self.sn = weak_order(p), weak_order(q), weak_order(p + q)
        self.zetas = grassmannians(p, q)
        P, Q = self.sp.size, self.sq.size
        wu = _words(self.sp.perms, p)
        wv = _words(self.sq.perms, q) + p
        sums = np.concatenate([np.repeat(wu, Q, axis=0), np.tile(wv, (P, 1))], axis=1)
        self.img = np.empty((len(self.zetas), P * Q), dtype=np.int64)
        for z, zeta in enumerate(self.zetas):
            zinv = np.array(inverse(zeta), dtype=np.int64) - 1
            self.img[z] = _kernels.lex_ranks(sums[:, zinv])
        lp, lq = self.sp.leq_matrix(), self.sq.leq_matrix()
        self.pair_leq = (lp[:, None, :, None] & lq[None, :, None, :]).reshape(P * Q, P * Q)

    def pair(self, u, v) -> int:
        return self.sp.index[u] * self.sq.size + self.sq.index[v]

    def unpair(self, a):
        iu, iv = divmod(int(a), self.sq.size)
        return self.sp.perms[iu], self.sq.perms[iv]


@lru_cache(maxsize=None)
def _facets_cached(p, q):
    return _Facets(p, q)


def _facets(p, q) -> _Facets:
    weak_order(p + q)  # degree guard
    return _facets_cached(p, q)


@lru_cache(maxsize=None)
def _m_product(u, v):
    fd = _facets(len(u), len(v))
    a = fd.pair(u, v)
    upper = np.nonzero(fd.pair_leq[a])[0]
    upper = upper[upper != a]
    bases = np.ascontiguousarray(fd.img[:, a])
    blockers = np.ascontiguousarray(fd.img[:, upper]) if upper.size else np.full((len(fd.zetas), 1), -1, dtype=np.int64)
    counts = _kernels.accumulate_exclusive(fd.sn.masks, bases, blockers, np.zeros(fd.sn.size, dtype=np.int64))
    return Element._raw(SSYM_M, {fd.sn.perms[w]: int(counts[w]) for w in np.nonzero(counts)[0]})


def m_product(u, v) -> Element:
    """M_u M_v = sum of alpha^w_{u,v} M_w.

    ``alpha^w_{u,v}`` counts Grassmannians ``zeta`` with ``rho_zeta(u, v) <= w``
    and no larger pair ``(u', v')`` with ``rho_zeta(u', v') <= w``.
    """
    return _m_product(_as_perm(u), _as_perm(v))


@dataclass(frozen=True)
class AlphaQuery:
    u: Permutation
    v: Permutation
    w: Permutation

    def __post_init__(self):
        for name in ("u", "v", "w"):
            object.__setattr__(self, name, _as_perm(getattr(self, name)))
        if len(self.w) != len(self.u) + len(self.v):
            raise DegreeMismatch(f"w has degree {len(self.w)}, expected {len(self.u)} + {len(self.v)}")


def _alpha_set_by_max(q: AlphaQuery):
    # zeta counts when the preimage of [1, w] under rho_zeta has maximum (u, v)
    p, r = len(q.u), len(q.v)
    out = []
    for zeta in grassmannians(p, r):
        pre = [(a, b) for a in symmetric_group(p) for b in symmetric_group(r) if weak_leq(rho(zeta, a, b), q.w)]
        tops = [x for x in pre if all(weak_leq(y[0], x[0]) and weak_leq(y[1], x[1]) for y in pre)]
        if tops == [(q.u, q.v)]:
            out.append(zeta)
    return tuple(out)


def _alpha_set_by_conditions(q: AlphaQuery):
    p, r = len(q.u), len(q.v)
    ups = [a for a in symmetric_group(p) if weak_leq(q.u, a)]
    vps = [b for b in symmetric_group(r) if weak_leq(q.v, b)]
    out = []
    for zeta in grassmannians(p, r):
        if not weak_leq(rho(zeta, q.u, q.v), q.w):
            continue
        if any(weak_leq(rho(zeta, a, b), q.w) for a in ups for b in vps if (a, b) != (q.u, q.v)):
            continue
        out.append(zeta)
    return tuple(out)


def alpha_set(query, v=None, w=None) -> tuple:
    """The Grassmannians ``A^w_{u,v}``, computed from both characterisations.

    Accepts an :class:`AlphaQuery` or ``(u, v, w)``.  Raises
    :class:`InternalConsistencyError` if the two characterisations disagree.
    """
    q = query if isinstance(query, AlphaQuery) else AlphaQuery(query, v, w)
    by_max = _alpha_set_by_max(q)
    by_conditions = _alpha_set_by_conditions(q)
    if by_max != by_conditions:
        raise InternalConsistencyError(f"A^{q.w}_{{{q.u},{q.v}}}: maximum gives {by_max}, conditions give {by_conditions}")
    return by_conditions


def alpha(query, v=None, w=None) -> int:
    return len(alpha_set(query, v, w))


def alpha_tables(p: int, q: int):
    """Membership of every ``zeta`` in every ``A^w_{u,v}`` of type (p, q), two ways.

    Returns ``(facets, by_max, by_conditions)``; both tables are boolean of shape
    ``(#Sh(p,q), p! q!, (p+q)!)``.  ``by_max`` asks that ``(u, v)`` be the
    maximum of the preimage of ``[1, w]``; ``by_conditions`` asks that it lie in
    the preimage with nothing strictly above it there.
    """
    fd = _facets(p, q)
    leq = fd.pair_leq.astype(np.int64)
    strictly_above = leq - np.eye(leq.shape[0], dtype=np.int64)
    not_below = 1 - leq.T
    shape = (len(fd.zetas), leq.shape[0], fd.sn.size)
    by_max = np.empty(shape, dtype=bool)
    by_conditions = np.empty(shape, dtype=bool)
    for z in range(len(fd.zetas)):
        hit = _kernels.leq_rows(fd.sn.masks, fd.img[z])
        h = hit.astype(np.int64)
        by_max[z] = hit & ((not_below @ h) == 0)
        by_conditions[z] = hit & ((strictly_above @ h) == 0)
    return fd, by_max, by_conditions


# --------------------------------------------------------------------------
# antipodes


@dataclass(frozen=True)
class AntipodeCoefficient:
    """One coefficient of an antipode with the objects it counts.

    For the F basis the witnesses are subsets ``S`` (sign ``+`` for odd size);
    for the M basis they are Grassmannians ``zeta`` and the coefficient is
    unsigned.
    """

    target: Permutation
    coefficient: int
    witnesses: tuple


@lru_cache(maxsize=None)
def _antipode_f(v):
    if not v:
        return Element._raw(SSYM_F, {UNIT: 1})
    out = {}
    for S in subsets(len(v)):
        sign = 1 if len(S) % 2 else -1
        vs = restrict(v, S)
        for zeta in grassmannians_of(S):
            _accumulate(out, compose(vs, inverse(zeta)), sign)
    return Element._raw(SSYM_F, out)


def antipode_f(v) -> Element:
    """S(F_v) = sum of lambda(v, w) F_w."""
    return _antipode_f(_as_perm(v))


def lambda_coefficient(v, w) -> AntipodeCoefficient:
    """lambda(v, w) = #{S odd : Des(w^{-1} v_S) in S} - #{S even : ...}."""
    v, w = _as_perm(v), _as_perm(w)
    if len(v) != len(w):
        raise DegreeMismatch("lambda needs permutations of equal degree")
    if not v:
        return AntipodeCoefficient(w, 1, ())
    winv = inverse(w)
    hits = tuple(S for S in subsets(len(v)) if descents(compose(winv, restrict(v, S))) <= S)
    coeff = sum(1 if len(S) % 2 else -1 for S in hits)
    return AntipodeCoefficient(w, coeff, hits)


def _proper_subsets(S: DescentSet):
    members = S.members
    for k in range(len(members)):
        for c in itertools.combinations(members, k):
            yield DescentSet(c, S.n)


@lru_cache(maxsize=None)
def _kappa_counts(v):
    """Vector of kappa(v, w) over S_n (lexicographic index of w)."""
    n = len(v)
    wo = weak_order(n)
    S = global_descents(v)
    iv = wo.index[v]
    up = wo.upset(iv)
    up = up[up != iv]
    upper_words = _words([restrict(wo.perms[j], S) for j in up], n)
    vs = np.array(restrict(v, S), dtype=np.int64).reshape(1, n)
    smaller = [(set(R.members), np.array(restrict(v, R), dtype=np.int64)) for R in _proper_subsets(S)]
    zetas = grassmannians_of(S)
    bases = np.empty(len(zetas), dtype=np.int64)
    blockers = []
    for z, zeta in enumerate(zetas):
        zinv = np.array(inverse(zeta), dtype=np.int64) - 1
        bases[z] = _kernels.lex_ranks(vs[:, zinv])[0]
        des = set(descents(zeta).members)
        rwords = [word for R, word in smaller if des <= R]
        block = list(_kernels.lex_ranks(upper_words[:, zinv])) if len(up) else []
        if rwords:
            block += list(_kernels.lex_ranks(np.array(rwords)[:, zinv]))
        blockers.append(block)
    counts = np.zeros(wo.size, dtype=np.int64)
    return _kernels.accumulate_exclusive(wo.masks, bases, _kernels.pad_blockers(blockers), counts)


@lru_cache(maxsize=None)
def _antipode_m(v):
    if not v:
        return Element._raw(SSYM_M, {UNIT: 1})
    wo = weak_order(len(v))
    sign = -1 if len(global_descents(v)) % 2 == 0 else 1
    counts = _kappa_counts(v)
    return Element._raw(SSYM_M, {wo.perms[w]: sign * int(counts[w]) for w in np.nonzero(counts)[0]})


def antipode_m(v) -> Element:
    """S(M_v) = (-1)^{#GDes(v)+1} sum of kappa(v, w) M_w."""
    return _antipode_m(_as_perm(v))


def kappa_set(v, w) -> AntipodeCoefficient:
    """C_S(v, w) for S = GDes(v), enumerated directly from its three conditions."""
    v, w = _as_perm(v), _as_perm(w)
    if len(v) != len(w):
        raise DegreeMismatch("kappa needs permutations of equal degree")
    if not v:
        return AntipodeCoefficient(w, 1, (UNIT,))
    S = global_descents(v)
    above = [x for x in symmetric_group(len(v)) if x != v and weak_leq(v, x)]
    proper = list(_proper_subsets(S))
    out = []
    for zeta in grassmannians_of(S):
        zinv = inverse(zeta)
        if not weak_leq(compose(restrict(v, S), zinv), w):
            continue
        if any(weak_leq(compose(restrict(x, S), zinv), w) for x in above):
            continue
        des = descents(zeta)
        if any(des <= R and weak_leq(compose(restrict(v, R), zinv), w) for R in proper):
            continue
        out.append(zeta)
    return AntipodeCoefficient(w, len(out), tuple(out))


def kappa(v, w) -> int:
    v, w = _as_perm(v), _as_perm(w)
    if not v:
        return kappa_set(v, w).coefficient
    wo = weak_order(len(v))
    return int(_kappa_counts(v)[wo.index[w]])


def antipode(x: Element) -> Element:
    if x.space == SSYM_F:
        return extend_linear(_antipode_f, x, SSYM_F)
    if x.space == SSYM_M:
        return extend_linear(_antipode_m, x, SSYM_M)
    raise SpaceMismatch(f"expected an SSym element, got {x.space}")


def antipode_power(x: Element, k: int) -> Element:
    """The antipode applied ``k`` times."""
    if k < 0:
        raise ValueError("k must be non-negative")
    for _ in range(k):
        x = antipode(x)
    return x


def duality_pairing(x: Element, y: Element) -> int:
    """Bilinear form with <F_u, F_v> = 1 exactly when u = v^{-1}."""
    x, y = to_f(x), to_f(y)
    return sum(c * y.coefficient(inverse(u)) for u, c in x.items())


# --------------------------------------------------------------------------
# registration


@lru_cache(maxsize=None)
def _m_product_via_f(u, v):
    return to_m(extend_product(_f_product, _m_from_f(u), _m_from_f(v)))


@lru_cache(maxsize=None)
def _m_coproduct_via_f(u):
    t = extend_coproduct(_f_coproduct, _m_from_f(u))
    out = {}
    for (a, b), c in t.items():
        for a2, ca in _f_from_m(a).items():
            for b2, cb in _f_from_m(b).items():
                _accumulate(out, (a2, b2), c * ca * cb)
    return Tensor._raw((SSYM_M, SSYM_M), out)


def m_product_via_f(u, v) -> Element:
    return _m_product_via_f(_as_perm(u), _as_perm(v))


def m_coproduct_via_f(u) -> Tensor:
    return _m_coproduct_via_f(_as_perm(u))


SSYM_F_STRUCTURE = register(
    HopfStructure(SSYM_F, UNIT, _f_product, _f_coproduct, symmetric_group, _antipode_f, name="SSym fundamental")
)
SSYM_M_STRUCTURE = register(
    HopfStructure(SSYM_M, UNIT, _m_product, _m_coproduct, symmetric_group, _antipode_m, name="SSym monomial")
)
# Not registered: the monomial basis by change of basis, with no closed antipode.
SSYM_M_VIA_F = HopfStructure(
    SSYM_M, UNIT, _m_product_via_f, _m_coproduct_via_f, symmetric_group, None, name="SSym monomial via F"
)
