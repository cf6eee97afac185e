"""Sign-vector algebra: worked examples, exhaustive laws for n <= 3, random laws beyond."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omarr.signvec import (DimensionError, Sign, SignedPermutation, SignVector, all_sign_vectors,
                           apply, compose, leq, negate, restrict)

from conftest import signed_permutations, sign_vectors, sv, svs, vector_pairs

SMALL = [list(all_sign_vectors(n)) for n in range(4)[1:]]


# -- frozen examples ----------------------------------------------------------

@pytest.mark.parametrize("x, y, want", [
    ("0-", "-+", "--"),            # R o X = Z in the two-line picture
    ("-+00+", "---++", "-+-++"),   # W o Y = Q
    ("---++", "-+00+", "---++"),   # Y o W = Y
    ("+0", "0+", "++"),            # P o Q = W
    ("0+", "00", "0+"),
    ("00", "0+", "0+"),
])
def test_compose_examples(x, y, want):
    assert str(compose(sv(x), sv(y))) == want


def test_zero_is_identity_for_compose():
    for x in SMALL[2]:
        z = SignVector.zero(3)
        assert compose(x, z) == x == compose(z, x)


@pytest.mark.parametrize("x, want", [("+-0", "-+0"), ("00", "00"), ("-+-++", "+-+--")])
def test_negate_examples(x, want):
    assert str(negate(sv(x))) == want
    assert negate(negate(sv(x))) == sv(x)


def test_leq_examples():
    assert leq(sv("00"), sv("+0")) and leq(sv("+0"), sv("+-"))
    assert leq(sv("+-"), sv("+-"))
    assert not leq(sv("+0"), sv("-+"))
    assert not leq(sv("+-"), sv("+0"))


@pytest.mark.parametrize("x, y, want", [
    ("--", "+-", {"0-"}),
    ("+++++", "-+00+", {"0++++"}),
    ("+++++", "---++", {"0++++", "+0+++", "++0++", "00+++", "0+0++", "+00++", "000++"}),
    ("+-", "-+", {"0-", "+0", "00"}),
    ("+0", "-0", {"00"}),
    ("++", "++", set()),
])
def test_restrict_examples(x, y, want):
    assert restrict(sv(x), sv(y)) == svs(*want)


def test_apply_examples():
    x = sv("+-")
    assert apply(SignedPermutation.identity(2), x) == x
    g = SignedPermutation((1, 0), frozenset({0}))
    assert str(apply(g, x)) == "--"
    assert str(g) == "relabel [2 1] reorient {1}"


def test_length_mismatch_raises():
    with pytest.raises(DimensionError):
        compose(sv("+"), sv("+-"))
    with pytest.raises(DimensionError):
        leq(sv("+"), sv("+-"))
    with pytest.raises(DimensionError):
        restrict(sv("+0"), sv("+"))
    with pytest.raises(DimensionError):
        apply(SignedPermutation.identity(3), sv("+-"))


def test_parse_and_text_form():
    x = sv("+-0")
    assert str(x) == "+-0" and len(x) == 3
    assert list(x) == [Sign.PLUS, Sign.MINUS, Sign.ZERO]
    assert sv("−+") == sv("-+")
    with pytest.raises(ValueError):
        sv("+x")
    with pytest.raises(ValueError):
        SignVector(0)


def test_sort_key_orders_zero_plus_minus():
    words = ["-", "+", "0", "0-", "+0", "-0", "00"]
    by_key = sorted((sv(w) for w in words), key=SignVector.sort_key)
    assert [str(v) for v in by_key if v.n == 1] == ["0", "+", "-"]
    assert [str(v) for v in by_key if v.n == 2] == ["00", "0-", "+0", "-0"]


def test_sign_negation():
    assert -Sign.PLUS == Sign.MINUS and -Sign.ZERO == Sign.ZERO


# -- exhaustive laws for n <= 3 -------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_exhaustive_algebra(n):
    V = SMALL[n - 1]
    z = SignVector.zero(n)
    for x in V:
        assert compose(x, x) == x
        assert negate(negate(x)) == x
        assert compose(z, x) == x == compose(x, z)
        for y in V:
            xy = compose(x, y)
            assert leq(x, xy)
            assert negate(xy) == compose(negate(x), negate(y))
            for w in restrict(x, y):
                assert leq(w, x) and w != x
            if leq(x, y) and leq(y, x):
                assert x == y
            for w in V:
                assert compose(compose(x, y), w) == compose(x, compose(y, w))
                if leq(x, y) and leq(y, w):
                    assert leq(x, w)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exhaustive_equivariance(n):
    V = SMALL[n - 1]
    for g in SignedPermutation.all(n):
        gi = g.inverse()
        for x in V:
            gx = g(x)
            assert gi(gx) == x
            assert g(negate(x)) == negate(gx)
            for y in V:
                gy = g(y)
                assert g(compose(x, y)) == compose(gx, gy)
                assert leq(x, y) == leq(gx, gy)
                assert {g(w) for w in restrict(x, y)} == restrict(gx, gy)


def test_group_action_composition_exhaustive_n3():
    group = list(SignedPermutation.all(3))
    assert len(group) == 48
    for g, h in itertools.product(group[::5], group[::3]):
        gh = g.compose(h)
        for x in SMALL[2]:
            assert gh(x) == g(h(x))


# -- random laws ---------------------------------------------------------------

@given(vector_pairs(3))
def test_compose_associative(xyz):
    x, y, z = xyz
    assert compose(compose(x, y), z) == compose(x, compose(y, z))


@given(vector_pairs(2))
def test_restrict_members_follow_the_formula(xy):
    x, y = xy
    out = restrict(x, y)
    conflict = [i for i in range(x.n) if x[i] != 0 and x[i] == -y[i]]
    assert len(out) == (2 ** len(conflict) - 1)
    for z in out:
        assert leq(z, x) and z != x
        for i in range(x.n):
            if i not in conflict:
                assert z[i] == x[i]


@given(st.data())
def test_signed_permutation_group_action(data):
    n = data.draw(st.integers(1, 7))
    g = data.draw(signed_permutations(n))
    h = data.draw(signed_permutations(n))
    x = data.draw(sign_vectors(n))
    y = data.draw(sign_vectors(n))
    assert g.compose(h)(x) == g(h(x))
    assert g.inverse()(g(x)) == x
    assert g(compose(x, y)) == compose(g(x), g(y))
    assert {g(w) for w in restrict(x, y)} == restrict(g(x), g(y))


@given(sign_vectors())
def test_text_round_trip(x):
    assert SignVector.parse(str(x)) == x
    assert SignVector.from_signs(x.signs()) == x
