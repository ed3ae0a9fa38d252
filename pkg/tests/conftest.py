import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from permhopf.permcore import DescentSet, Permutation, _perm

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def P(text):
    return Permutation(int(c) for c in text)


@st.composite
def permutations(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return _perm(draw(st.permutations(range(1, n + 1))))


@st.composite
def descent_sets(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    members = draw(st.sets(st.integers(1, n - 1))) if n > 1 else set()
    return DescentSet(tuple(members), n)


def all_perms(n):
    return [_perm(w) for w in itertools.permutations(range(1, n + 1))]


@pytest.fixture
def perm():
    return P
