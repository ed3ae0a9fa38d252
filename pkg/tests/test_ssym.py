import math

import numpy as np
import pytest
from conftest import P, all_perms, permutations
from hypothesis import given

from permhopf import ssym
from permhopf.errors import DegreeMismatch
from permhopf.formal import SSYM_F, SSYM_M, Element, coproduct, takeuchi_antipode
from permhopf.orders import weak_leq
from permhopf.permcore import UNIT, DescentSet, global_descents, grassmannians, identity, longest, rho
from permhopf.ssym import F, M


def _sum(*pairs, basis=F):
    return sum((c * basis(w) for w, c in pairs), Element(SSYM_F if basis is F else SSYM_M))


def test_f_product():
    words = ("12534", "15234", "15324", "15342", "51234", "51324", "51342", "53124", "53142", "53412")
    assert ssym.f_product(P("12"), P("312")) == _sum(*((w, 1) for w in words))
    assert ssym.f_product(UNIT, P("231")) == F("231")
    assert ssym.f_product(P("1"), P("1")) == F("12") + F("21")


@given(permutations(max_n=3), permutations(max_n=3))
def test_f_product_terms_are_distinct(u, v):
    x = ssym.f_product(u, v)
    assert len(x) == math.comb(len(u) + len(v), len(u))
    assert set(x.terms.values()) <= {1}


def test_f_coproduct():
    t = ssym.f_coproduct(P("42531"))
    expected = {(UNIT, P("42531")), (P("1"), P("2431")), (P("21"), P("321")), (P("213"), P("21")), (P("3142"), P("1")), (P("42531"), UNIT)}
    assert t.terms == {k: 1 for k in expected}
    assert ssym.f_coproduct(UNIT).terms == {(UNIT, UNIT): 1}
    assert ssym.f_coproduct(P("21")).terms == {(UNIT, P("21")): 1, (P("1"), P("1")): 1, (P("21"), UNIT): 1}


def test_change_of_basis():
    assert ssym.m_from_f(P("4123")) == F("4123") - F("4132") - F("4213") + F("4321")
    assert ssym.m_from_f(longest(4)) == F("4321")
    for n in range(6):
        for u in all_perms(n):
            assert ssym.to_m(ssym.m_from_f(u)) == M(u)
            assert ssym.to_f(ssym.f_from_m(u)) == F(u)


def test_to_m_handles_big_coefficients():
    x = (10**40) * F("21") - 3 * F("12") + F("1")
    assert ssym.to_f(ssym.to_m(x)) == x


def test_m_coproduct():
    assert ssym.m_coproduct(P("1")).terms == {(UNIT, P("1")): 1, (P("1"), UNIT): 1}
    expected = {(UNIT, P("4312")): 1, (P("1"), P("312")): 1, (P("21"), P("12")): 1, (P("4312"), UNIT): 1}
    assert ssym.m_coproduct(P("4312")).terms == expected
    for n in range(1, 5):
        for u in all_perms(n):
            if not global_descents(u):
                assert len(ssym.m_coproduct(u)) == 2


@pytest.mark.parametrize("n", range(0, 6))
def test_m_coproduct_matches_conversion(n):
    for u in all_perms(n):
        assert ssym.m_coproduct(u) == ssym.m_coproduct_via_f(u)


def test_alpha_examples():
    assert ssym.alpha_set(P("12"), P("21"), P("2431")) == (P("1234"), P("1324"))
    assert ssym.alpha(ssym.AlphaQuery(P("12"), P("21"), P("2431"))) == 2
    assert ssym.alpha(P("1"), P("1"), P("21")) == 2
    assert ssym.alpha(P("21"), P("21"), identity(4)) == 0
    with pytest.raises(DegreeMismatch):
        ssym.AlphaQuery(P("1"), P("1"), P("123"))


def test_m_product_examples():
    expected = _sum(
        ("4312", 1), ("4231", 1), ("3421", 1), ("4123", 1), ("2341", 1), ("1243", 1),
        ("1423", 1), ("1342", 1), ("1432", 3), ("2431", 2), ("4132", 2), basis=M,
    )
    assert ssym.m_product(P("12"), P("21")) == expected
    assert ssym.m_product(UNIT, P("312")) == M("312")
    assert ssym.m_product(P("1"), P("1")) == M("12") + 2 * M("21")


@pytest.mark.parametrize("n", range(0, 6))
def test_m_product_matches_conversion(n):
    for p in range(n + 1):
        for u in all_perms(p):
            for v in all_perms(n - p):
                x = ssym.m_product(u, v)
                assert x == ssym.m_product_via_f(u, v)
                assert all(c > 0 for c in x.terms.values())


@pytest.mark.parametrize("pq", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)])
def test_alpha_tables_agree_with_kernel_and_literal(pq):
    p, q = pq
    fd, by_max, by_conditions = ssym.alpha_tables(p, q)
    assert (by_max == by_conditions).all()
    counts = by_conditions.sum(axis=0)
    for a in range(counts.shape[0]):
        u, v = fd.unpair(a)
        x = ssym.m_product(u, v)
        for w in np.nonzero(counts[a])[0]:
            assert x.coefficient(fd.sn.perms[w]) == counts[a, w]
        assert len(x) == np.count_nonzero(counts[a])
    sample = fd.sn.perms[:: max(1, fd.sn.size // 6)]
    for a in range(0, counts.shape[0], 2):
        u, v = fd.unpair(a)
        for w in sample:
            assert ssym.alpha(u, v, w) == counts[a, fd.sn.index[w]]


def _alpha_bruteforce(u, v, w):
    # oracle: direct reading of "(u, v) is the maximum of the preimage of [1, w]"
    p, q = len(u), len(v)
    count = 0
    for zeta in grassmannians(p, q):
        pre = [(a, b) for a in all_perms(p) for b in all_perms(q) if weak_leq(rho(zeta, a, b), w)]
        if (u, v) in pre and all(weak_leq(a, u) and weak_leq(b, v) for a, b in pre):
            count += 1
    return count


def test_alpha_bruteforce_degree_4():
    for u in all_perms(2):
        for v in all_perms(2):
            x = ssym.m_product(u, v)
            for w in all_perms(4):
                assert x.coefficient(w) == _alpha_bruteforce(u, v, w)


def test_antipode_f_examples():
    assert ssym.antipode_f(P("231")) == F("132") - F("213") - 2 * F("231") + F("312")
    c = ssym.lambda_coefficient(P("231"), P("312"))
    assert c.coefficient == 1
    assert c.witnesses == (DescentSet((1,), 3), DescentSet((2,), 3), DescentSet((1, 2), 3))
    assert ssym.antipode_f(P("1")) == -F("1")
    assert ssym.antipode_f(UNIT) == F("")


def test_antipode_m_examples():
    expected = _sum(
        ("1234", 1), ("1324", 2), ("1342", 1), ("1423", 1), ("2314", 1),
        ("2413", 1), ("3124", 1), ("3142", 1), ("3412", 1), basis=M,
    )
    assert ssym.antipode_m(P("3412")) == expected
    c = ssym.kappa_set(P("3412"), P("3412"))
    assert c.coefficient == 1 and c.witnesses == (P("3412"),)
    assert ssym.antipode_m(P("1")) == -M("1")
    assert ssym.antipode_m(UNIT) == M("")


@pytest.mark.parametrize("n", range(1, 6))
def test_antipodes_match_takeuchi(n):
    for v in all_perms(n):
        assert ssym.antipode_f(v) == takeuchi_antipode(F(v))
        assert ssym.antipode_m(v) == takeuchi_antipode(M(v), ssym.SSYM_M_VIA_F)


@pytest.mark.parametrize("n", range(1, 5))
def test_literal_coefficients_match(n):
    for v in all_perms(n):
        xf, xm = ssym.antipode_f(v), ssym.antipode_m(v)
        sign = (-1) ** (len(global_descents(v)) + 1)
        for w in all_perms(n):
            lam = ssym.lambda_coefficient(v, w)
            assert lam.coefficient == xf.coefficient(w)
            assert lam.coefficient == sum(1 if len(S) % 2 else -1 for S in lam.witnesses)
            kap = ssym.kappa_set(v, w)
            assert kap.coefficient == len(kap.witnesses) == ssym.kappa(v, w)
            assert sign * kap.coefficient == xm.coefficient(w)


@pytest.mark.parametrize("n", range(1, 6))
def test_kappa_sign_uniformity(n):
    for v in all_perms(n):
        sign = (-1) ** (len(global_descents(v)) + 1)
        assert all(sign * c > 0 for c in ssym.antipode_m(v).terms.values())


def test_sh_of_subset_example():
    from permhopf.permcore import grassmannians_of

    assert grassmannians_of(DescentSet((2,), 4)) == tuple(P(w) for w in ("1234", "1324", "1423", "2314", "2413", "3412"))


def test_antipode_power():
    x = M("231")
    for m in range(1, 6):
        assert ssym.antipode_power(x, 2 * m) == M("231") + 2 * m * (M("213") - M("132"))
    assert ssym.antipode_power(x, 0) == x
    assert ssym.antipode(F("12")) == F("21")
    assert ssym.antipode_power(F("12"), 2) == F("12")


def test_duality_pairing():
    assert ssym.duality_pairing(F("231"), F("312")) == 1
    assert ssym.duality_pairing(F("231"), F("231")) == 0


@pytest.mark.parametrize("total", range(0, 6))
def test_pairing_is_a_hopf_pairing(total):
    for p in range(total + 1):
        for u in all_perms(p):
            for v in all_perms(total - p):
                prod = ssym.f_product(u, v)
                for w in all_perms(total):
                    rhs = sum(
                        c * ssym.duality_pairing(F(u), F(a)) * ssym.duality_pairing(F(v), F(b))
                        for (a, b), c in coproduct(F(w)).items()
                    )
                    assert ssym.duality_pairing(prod, F(w)) == rhs


@given(permutations(max_n=5), permutations(max_n=5))
def test_pairing_mixed_bases(u, v):
    x = M(u)
    assert ssym.duality_pairing(x, F(v)) == ssym.duality_pairing(ssym.to_f(x), F(v))


@pytest.mark.parametrize("space", [SSYM_F, SSYM_M])
def test_grading(space):
    B = F if space == SSYM_F else M
    for n in range(5):
        for u in all_perms(n):
            assert ssym.antipode(B(u)).degrees() <= {n}
            for (a, b) in coproduct(B(u)).terms:
                assert len(a) + len(b) == n
