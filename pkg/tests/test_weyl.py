import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hecke2b.errors import BoundExceeded, DomainError, SizeMismatch
from hecke2b.weyl import (
    Root,
    SignedPermutation,
    WeightVector,
    act_on_weight,
    compose,
    enumerate_group,
    generators,
    identity,
    inverse,
    inversion_set,
    parse_root,
    positive_roots,
)


def W(*xs):
    return SignedPermutation(xs)


def test_generators():
    s = generators(3)
    assert generators(2)[0] == W(-1, 2)
    assert generators(2)[1] == W(2, 1)
    assert s[2] == W(1, 3, 2)


def test_compose_and_inverse():
    s0, s1 = generators(2)
    assert compose(s0, s0) == identity(2)
    # (u o w)(i) = u(w(i)): s1(s0(1)) = s1(-1) = -2 and s1(s0(2)) = 1
    assert compose(s1, s0) == W(-2, 1)
    assert compose(s0, s1) == W(2, -1)
    for u in enumerate_group(2):
        for w in enumerate_group(2):
            assert all(compose(u, w)(i) == u(w(i)) for i in (1, 2, -1, -2))
    assert inverse(W(-2, 1)) == W(2, -1)
    with pytest.raises(SizeMismatch):
        compose(s0, identity(3))


def test_invalid_window():
    with pytest.raises(DomainError):
        W(1, 1)


def test_inversion_set_examples():
    assert inversion_set(identity(3)) == frozenset()
    assert inversion_set(generators(2)[0]) == {Root.eps(1)}


def _by_definition(w):
    """R(w) from the definition: alpha positive with w(alpha) negative."""
    out = set()
    for root in positive_roots(w.k):
        coeffs = root.coefficients(w.k)
        image = [0] * w.k
        for i, a in enumerate(coeffs, start=1):
            if a:
                j = w(i)
                image[abs(j) - 1] += a if j > 0 else -a
        # a root is positive iff its last nonzero coefficient is positive
        if [x for x in image if x][-1] < 0:
            out.add(root)
    return frozenset(out)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_inversion_sets_match_definition_and_length(k):
    seen = set()
    for w in enumerate_group(k):
        r = inversion_set(w)
        assert r == _by_definition(w)
        assert len(r) == len(w.reduced_word())
        seen.add(r)
    assert len(seen) == 2**k * len(list(itertools.permutations(range(k))))


def test_reduced_word_reconstructs():
    for w in enumerate_group(3):
        gens = generators(3)
        x = identity(3)
        for i in w.reduced_word():
            x = compose(x, gens[i])
        assert x == w


@pytest.mark.parametrize("k,n", [(1, 2), (2, 8), (3, 48)])
def test_group_sizes(k, n):
    elems = list(enumerate_group(k))
    assert len(elems) == n == len(set(elems))


def test_bound(monkeypatch):
    monkeypatch.setenv("HECKE2B_MAX_K", "2")
    with pytest.raises(BoundExceeded):
        next(enumerate_group(3))


def test_action_examples():
    v = WeightVector((6, 10))
    s0, s1 = generators(2)
    assert act_on_weight(identity(2), v) == v
    assert act_on_weight(s0, v).c2 == (-6, 10)
    assert act_on_weight(s1, v).c2 == (10, 6)


group3 = list(enumerate_group(3))


@given(st.sampled_from(group3), st.sampled_from(group3))
def test_action_is_a_group_action(u, w):
    v = WeightVector((2, 6, 10))
    assert act_on_weight(u, act_on_weight(w, v)) == act_on_weight(compose(u, w), v)


@pytest.mark.parametrize("text,root", [("e3", Root.eps(3)), ("e3-e2", Root.minus(3, 2)), ("e2+e1", Root.plus(2, 1))])
def test_parse_root(text, root):
    assert parse_root(text) == root
    assert str(root) == text


def test_parse_root_rejects_negative_roots():
    with pytest.raises(DomainError):
        parse_root("e1-e2")
