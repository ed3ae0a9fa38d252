import math

import pytest

from permhopf.formal import takeuchi_antipode, verify_hopf_axioms
from permhopf.orders import compositions
from permhopf.qsym import (
    EMPTY,
    F,
    M,
    qsym_f_from_m,
    qsym_m_antipode,
    qsym_m_coproduct,
    qsym_m_from_f,
    qsym_m_product,
    quasi_shuffles,
    to_qsym_f,
    to_qsym_m,
)


def test_product():
    assert qsym_m_product((2,), (1, 1)) == M((1, 1, 2)) + M((1, 2, 1)) + M((2, 1, 1)) + M((1, 3)) + M((3, 1))
    assert qsym_m_product((), (2, 1)) == M((2, 1))
    assert qsym_m_product((1,), (1,)) == 2 * M((1, 1)) + M((2,))


def test_coproduct():
    assert qsym_m_coproduct((2, 1)).terms == {(EMPTY, (2, 1)): 1, ((2,), (1,)): 1, ((2, 1), EMPTY): 1}
    assert qsym_m_coproduct(()).terms == {(EMPTY, EMPTY): 1}
    assert len(qsym_m_coproduct((1, 1, 1))) == 4


def test_antipode():
    assert qsym_m_antipode((1,)) == -M((1,))
    assert qsym_m_antipode((2, 1)) == M((1, 2)) + M((3,))
    assert qsym_m_antipode((1, 1)) == M((1, 1)) + M((2,))


@pytest.mark.parametrize("n", range(7))
def test_antipode_matches_takeuchi(n):
    for alpha in compositions(n):
        assert qsym_m_antipode(alpha) == takeuchi_antipode(M(alpha))


def test_conversion():
    assert qsym_f_from_m((2,)) == M((2,)) + M((1, 1))
    assert qsym_f_from_m((1, 1)) == M((1, 1))
    for n in range(7):
        for alpha in compositions(n):
            assert to_qsym_f(qsym_f_from_m(alpha)) == F(alpha)
            assert to_qsym_m(qsym_m_from_f(alpha)) == M(alpha)


def _shuffle_ways(a, b):
    # oracle: count quasi-shuffle ways by choosing, at each step, a head from a, from b, or from both
    if not a or not b:
        return {tuple(a) + tuple(b): 1}
    out = {}
    for head, ra, rb in ((a[0], a[1:], b), (b[0], a, b[1:]), (a[0] + b[0], a[1:], b[1:])):
        for g, c in _shuffle_ways(ra, rb).items():
            out[(head,) + g] = out.get((head,) + g, 0) + c
    return out


@pytest.mark.parametrize("total", range(7))
def test_commutative_and_counted(total):
    for p in range(total + 1):
        for a in compositions(p):
            for b in compositions(total - p):
                assert qsym_m_product(a, b) == qsym_m_product(b, a)
                assert dict(quasi_shuffles(a, b)) == _shuffle_ways(a, b)


@pytest.mark.parametrize("n", range(1, 6))
def test_power_of_m1(n):
    x = M(EMPTY)
    for _ in range(n):
        x = x * M((1,))
    assert x.coefficient((1,) * n) == math.factorial(n)


def test_axioms_degree_5():
    report = verify_hopf_axioms("QSym", 5)
    assert report.ok, report.summary()
