"""Maps between SSym and QSym and the structure they reveal.

The descent map ``D`` is a Hopf morphism SSym -> QSym and ``Z`` a coalgebra
splitting of it.  Global descents grade SSym as a cofree coalgebra, which
gives its coradical filtration and primitives.  The left Hopf kernel of ``D``
and the cocycle ``sigma`` describe SSym as a crossed product over QSym.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import qsym, ssym
from .errors import InternalConsistencyError, SpaceMismatch
from .formal import (
    QSYM_F,
    QSYM_M,
    SSYM_F,
    SSYM_M,
    Element,
    Tensor,
    _accumulate,
    extend_linear,
    iterated_coproduct,
    map_slot,
    split_slot,
    structure,
)
from .orders import as_composition, composition_to_subset, compositions, subset_to_composition, symmetric_group, z_of
from .permcore import descents, global_descents

# --------------------------------------------------------------------------
# descent map and its splitting


def is_closed(u) -> bool:
    return descents(u) == global_descents(u)


def _d_on_f(u):
    return Element._raw(QSYM_F, {subset_to_composition(descents(u)): 1})


def _d_on_m(u):
    if not is_closed(u):
        return Element._raw(QSYM_M, {})
    return Element._raw(QSYM_M, {subset_to_composition(global_descents(u)): 1})


def descent_map(x: Element, *, cross_check: bool = False) -> Element:
    """D(F_u) = Fq[Des(u)]; D(M_u) = Mq[GDes(u)] for closed u and 0 otherwise.

    With ``cross_check`` the image is also computed through the other basis and
    the two results compared.
    """
    if x.space == SSYM_F:
        out = extend_linear(_d_on_f, x, QSYM_F)
        other = lambda: qsym.to_qsym_f(extend_linear(_d_on_m, ssym.to_m(x), QSYM_M))
    elif x.space == SSYM_M:
        out = extend_linear(_d_on_m, x, QSYM_M)
        other = lambda: qsym.to_qsym_m(extend_linear(_d_on_f, ssym.to_f(x), QSYM_F))
    else:
        raise SpaceMismatch(f"the descent map acts on SSym, not {x.space}")
    if cross_check and other() != out:
        raise InternalConsistencyError(f"descent map of {x} differs between the F and M routes")
    return out


def _z_rule(alpha):
    return Element._raw(SSYM_M, {z_of(composition_to_subset(alpha)): 1})


def splitting_z(x: Element) -> Element:
    """Mq[S] -> M[Z(S)], extended linearly (an F-basis input is converted first)."""
    if x.space.algebra != "QSym":
        raise SpaceMismatch(f"Z acts on QSym, not {x.space}")
    return extend_linear(_z_rule, qsym.to_qsym_m(x), SSYM_M)


# --------------------------------------------------------------------------
# global descents and the coradical filtration


def global_descent_grade(u) -> int:
    """k such that u has k - 1 global descents (0 for the empty permutation)."""
    return len(global_descents(u)) + 1 if len(u) else 0


@lru_cache(maxsize=None)
def primitive_basis(n: int) -> tuple:
    """Permutations of degree n without global descents; their M_u span the primitives."""
    if n == 0:
        return ()
    return tuple(u for u in symmetric_group(n) if not global_descents(u))


@lru_cache(maxsize=None)
def grade_counts(n: int) -> dict:
    """{k: #permutations of degree n with k - 1 global descents}, by direct count."""
    out = {}
    for u in symmetric_group(n):
        _accumulate(out, global_descent_grade(u), 1)
    return out


def predicted_grade_counts(n: int) -> dict:
    """Grade counts predicted by cofreeness: products of primitive counts over compositions."""
    prim = {a: len(primitive_basis(a)) for a in range(1, n + 1)}
    out = {}
    for alpha in compositions(n):
        _accumulate(out, len(alpha), math.prod(prim[a] for a in alpha))
    return out


@dataclass(frozen=True)
class FiltrationReport:
    element: Element
    level: int
    certificate: Tensor

    def recompute(self) -> Tensor:
        return iterated_coproduct(self.element, self.level)


def _positive_part(t: Tensor) -> Tensor:
    keep = {k: c for k, c in t.items() if all(s.degree(i) > 0 for s, i in zip(t.spaces, k))}
    return Tensor._raw(t.spaces, keep)


def coradical_level(x: Element) -> FiltrationReport:
    """Smallest k with no all-positive-degree term in Delta^{(k)}(x)."""
    h = structure(x.space)
    t = _positive_part(Tensor._raw((x.space,), {(k,): c for k, c in x.items()}))
    level = 0
    while t:
        level += 1
        t = _positive_part(split_slot(t, level - 1, h.coproduct))
    return FiltrationReport(x, level, iterated_coproduct(x, level, bracket="right"))


# --------------------------------------------------------------------------
# left Hopf kernel of D


def _kernel_defect(x: Element) -> Tensor:
    h = structure(x.space)
    t = split_slot(Tensor._raw((x.space,), {(k,): c for k, c in x.items()}), 0, h.coproduct)
    rule = _d_on_f if x.space == SSYM_F else _d_on_m
    target = QSYM_F if x.space == SSYM_F else QSYM_M
    image = map_slot(t, 1, rule, target)
    one = Tensor._raw((x.space, target), {(k, qsym.EMPTY): c for k, c in x.items()})
    return image - one


def kernel_member(x: Element) -> bool:
    """Whether sum x_1 (x) D(x_2) equals x (x) 1."""
    if x.space.algebra != "SSym":
        raise SpaceMismatch(f"kernel membership is for SSym elements, not {x.space}")
    return not _kernel_defect(x)


def _ends_in_identity(u) -> bool:
    n = len(u)
    return any(tuple(u[n - j :]) == tuple(range(1, j + 1)) for j in range(1, n + 1))


def kernel_basis(n: int) -> tuple:
    """Permutations whose word does not end in 1, 2, ..., j for any j >= 1."""
    return tuple(u for u in symmetric_group(n) if not _ends_in_identity(u))


def kernel_dimension_formula(n: int) -> int:
    return math.factorial(n) - sum(math.factorial(k) for k in range(n))


def kernel_member_count(n: int) -> int:
    """Number of M_u of degree n that lie in the kernel."""
    return sum(kernel_member(ssym.M(u)) for u in symmetric_group(n))


def _rank(rows) -> int:
    rows = [[Fraction(c) for c in r] for r in rows if any(r)]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] / p[col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], p)]
        rank += 1
    return rank


def kernel_dimension(n: int) -> int:
    """Dimension of the degree-n kernel by exact linear algebra on the M basis."""
    perms = symmetric_group(n)
    defects = [_kernel_defect(ssym.M(u)) for u in perms]
    keys = sorted({k for d in defects for k in d.terms}, key=repr)
    if not keys:
        return len(perms)
    columns = [[d.coefficient(k) for k in keys] for d in defects]
    return len(perms) - _rank(columns)


# --------------------------------------------------------------------------
# crossed-product cocycle


def cocycle_sigma(S, T) -> Element:
    """sigma(Mq[S], Mq[T]) = sum Z(S_1) Z(T_1) S(Z(S_2 T_2))."""
    a, b = as_composition(S), as_composition(T)
    out = Element(SSYM_M)
    for (a1, a2), c in qsym.qsym_m_coproduct(a).items():
        for (b1, b2), d in qsym.qsym_m_coproduct(b).items():
            tail = ssym.antipode(splitting_z(qsym.qsym_m_product(a2, b2)))
            head = _z_rule(a1) * _z_rule(b1)
            out = out + (c * d) * (head * tail)
    return out
