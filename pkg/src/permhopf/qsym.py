"""Quasi-symmetric functions in the monomial and fundamental bases.

The monomial basis carries the primary rules (quasi-shuffle product,
deconcatenation coproduct, closed antipode).  The fundamental basis is
obtained by conjugating them with the Moebius-inversion change of basis.
Indices are compositions; a DescentSet is accepted anywhere an index is.

``x_from_y(alpha)`` returns the basis element ``x_alpha`` written in basis ``y``.
"""

from __future__ import annotations

from functools import lru_cache

from .formal import (
    QSYM_F,
    QSYM_M,
    Element,
    HopfStructure,
    Tensor,
    _accumulate,
    extend_coproduct,
    extend_linear,
    extend_product,
    register,
)
from .orders import _comp, as_composition, boolean_mobius, coarsenings, compositions, refinements, reverse

EMPTY = _comp(())


@lru_cache(maxsize=None)
def quasi_shuffles(alpha: tuple, beta: tuple) -> dict:
    """``{gamma: number of quasi-shuffle ways producing gamma}``."""
    if not alpha:
        return {_comp(beta): 1}
    if not beta:
        return {_comp(alpha): 1}
    a, b = alpha[0], beta[0]
    out = {}
    for head, rest in (
        (a, quasi_shuffles(alpha[1:], beta)),
        (b, quasi_shuffles(alpha, beta[1:])),
        (a + b, quasi_shuffles(alpha[1:], beta[1:])),
    ):
        for gamma, c in rest.items():
            _accumulate(out, _comp((head, *gamma)), c)
    return out


@lru_cache(maxsize=None)
def _m_product(alpha, beta):
    return Element._raw(QSYM_M, dict(quasi_shuffles(alpha, beta)))


def qsym_m_product(alpha, beta) -> Element:
    return _m_product(as_composition(alpha), as_composition(beta))


@lru_cache(maxsize=None)
def _m_coproduct(alpha):
    return Tensor._raw((QSYM_M, QSYM_M), {(_comp(alpha[:p]), _comp(alpha[p:])): 1 for p in range(len(alpha) + 1)})


def qsym_m_coproduct(alpha) -> Tensor:
    return _m_coproduct(as_composition(alpha))


@lru_cache(maxsize=None)
def _m_antipode(alpha):
    sign = -1 if len(alpha) % 2 else 1
    out = {}
    for beta in coarsenings(alpha):
        _accumulate(out, reverse(beta), sign)
    return Element._raw(QSYM_M, out)


def qsym_m_antipode(alpha) -> Element:
    """(-1)^{#parts} times the sum of the reversed coarsenings of ``alpha``."""
    return _m_antipode(as_composition(alpha))


# --------------------------------------------------------------------------
# change of basis


@lru_cache(maxsize=None)
def _f_from_m(alpha):
    return Element._raw(QSYM_M, {beta: 1 for beta in refinements(alpha)})


def qsym_f_from_m(alpha) -> Element:
    """F_alpha as the sum of M_beta over refinements beta of alpha."""
    return _f_from_m(as_composition(alpha))


@lru_cache(maxsize=None)
def _m_from_f(alpha):
    return Element._raw(QSYM_F, {beta: boolean_mobius(alpha, beta) for beta in refinements(alpha)})


def qsym_m_from_f(alpha) -> Element:
    return _m_from_f(as_composition(alpha))


def to_qsym_m(x: Element) -> Element:
    if x.space == QSYM_M:
        return x
    return extend_linear(_f_from_m, x, QSYM_M)


def to_qsym_f(x: Element) -> Element:
    if x.space == QSYM_F:
        return x
    return extend_linear(_m_from_f, x, QSYM_F)


@lru_cache(maxsize=None)
def _f_product(alpha, beta):
    return to_qsym_f(extend_product(_m_product, _f_from_m(alpha), _f_from_m(beta)))


def qsym_f_product(alpha, beta) -> Element:
    return _f_product(as_composition(alpha), as_composition(beta))


@lru_cache(maxsize=None)
def _f_coproduct(alpha):
    t = extend_coproduct(_m_coproduct, _f_from_m(alpha))
    out = {}
    for (a, b), c in t.items():
        for a2, ca in _m_from_f(a).items():
            for b2, cb in _m_from_f(b).items():
                _accumulate(out, (a2, b2), c * ca * cb)
    return Tensor._raw((QSYM_F, QSYM_F), out)


def qsym_f_coproduct(alpha) -> Tensor:
    return _f_coproduct(as_composition(alpha))


@lru_cache(maxsize=None)
def _f_antipode(alpha):
    return to_qsym_f(extend_linear(_m_antipode, _f_from_m(alpha), QSYM_M))


def qsym_f_antipode(alpha) -> Element:
    return _f_antipode(as_composition(alpha))


def M(alpha, coeff=1) -> Element:
    return Element.basis(QSYM_M, as_composition(alpha), coeff)


def F(alpha, coeff=1) -> Element:
    return Element.basis(QSYM_F, as_composition(alpha), coeff)


QSYM_M_STRUCTURE = register(
    HopfStructure(QSYM_M, EMPTY, _m_product, _m_coproduct, compositions, _m_antipode, name="QSym monomial")
)
QSYM_F_STRUCTURE = register(
    HopfStructure(QSYM_F, EMPTY, _f_product, _f_coproduct, compositions, _f_antipode, name="QSym fundamental")
)
