import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import OMEGA_14, OMEGA_15, OMEGA_24
from stratlab.errors import NotInWq, NotTabulated, ParseError
from stratlab.weyl import (
    CosetRep,
    Permutation,
    coset_rep,
    enumerate_W,
    enumerate_Wq,
    eo_dimension,
    forget_unitary_32,
    is_in_Wq,
    length,
    require_in_Wq,
)


def brute_length(images):
    n = len(images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])


def brute_in_Wq(images, q):
    pos = {v: i for i, v in enumerate(images)}
    increasing = all(pos[k] < pos[k + 1] for k in range(1, q))
    mirrored = all(images[i] + images[2 * q - 1 - i] == 2 * q + 1 for i in range(2 * q))
    return increasing and mirrored


def test_identity_has_no_inversions():
    assert length(Permutation.identity(5)) == 0


def test_gamma_34_is_double_transposition():
    g = coset_rep(CosetRep(3, 2, (3, 4)))
    assert g == Permutation.from_cycles("(1,3)(2,4)", 5)
    assert g.images == (3, 4, 1, 2, 5)
    assert length(g) == 4


def test_gamma_45_expands_cycle_product():
    g = coset_rep(CosetRep(3, 2, (4, 5)))
    # (2,3,4,5)(1,2,3,4), rightmost first, worked out by hand
    assert g.images == (3, 4, 5, 1, 2)
    assert length(g) == 6


def test_gamma_12_is_identity():
    assert coset_rep(CosetRep(3, 2, (1, 2))) == Permutation.identity(5)


def test_composition_is_right_to_left():
    a = Permutation.from_cycles("(1,2)", 3)
    b = Permutation.from_cycles("(2,3)", 3)
    # (1,2)(2,3): 2 -> 3 first, then 3 stays
    assert (a * b)(2) == 3
    assert (a * b)(3) == 1


def test_overlapping_cycles_compose():
    w = Permutation.from_cycles("(1,2)(2,3)", 3)
    assert w == Permutation.from_cycles("(1,2)", 3) * Permutation.from_cycles("(2,3)", 3)


def test_cycle_string_round_trip():
    for s in (OMEGA_24, OMEGA_14, OMEGA_15):
        w = Permutation.from_cycles(s, 10)
        assert w.cycle_string() == s
        assert Permutation.from_cycles(w.cycle_string(), 10) == w
    assert Permutation.identity(4).cycle_string() == "()"


@pytest.mark.parametrize("bad", ["(1,2", "(1,1)", "(0,2)", "(a,b)"])
def test_malformed_cycles_rejected(bad):
    with pytest.raises((ParseError, ValueError)):
        Permutation.from_cycles(bad, 4)


def test_enumerate_32_matches_listed_strata():
    reps = enumerate_W(3, 2)
    assert [r.u for r in reps] == [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
    assert [eo_dimension(r) for r in reps] == [u + v - 3 for u, v in (r.u for r in reps)]


def test_enumerate_small_cases():
    assert [r.u for r in enumerate_W(4, 0)] == [()]
    assert [r.u for r in enumerate_W(1, 1)] == [(1,), (2,)]


@pytest.mark.parametrize("u, d", [((1, 2), 0), ((3, 4), 4), ((4, 5), 6)])
def test_eo_dimension_anchors(u, d):
    assert eo_dimension(CosetRep(3, 2, u)) == d


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 8).flatmap(lambda q: st.tuples(st.just(q), st.integers(0, q))))
def test_length_equals_dimension(qb):
    q, b = qb
    reps = enumerate_W(q - b, b)
    assert len(reps) == math.comb(q, b)
    assert len({r.u for r in reps}) == len(reps)
    for r in reps:
        g = coset_rep(r)
        assert length(g) == eo_dimension(r) == brute_length(g.images)


def test_Wq_identity_and_tabulated():
    assert is_in_Wq(Permutation.identity(10), 5)
    for s in (OMEGA_24, OMEGA_14, OMEGA_15):
        assert is_in_Wq(Permutation.from_cycles(s, 10), 5)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_Wq_against_brute_force(q):
    brute = {p for p in itertools.permutations(range(1, 2 * q + 1)) if brute_in_Wq(p, q)}
    assert {w.images for w in enumerate_Wq(q)} == brute
    assert len(brute) == 2**q
    for p in itertools.permutations(range(1, 2 * q + 1)):
        assert is_in_Wq(Permutation(p), q) == (p in brute)


def test_Wq_count_q5():
    ws = enumerate_Wq(5)
    assert len(ws) == 32 and all(is_in_Wq(w, 5) for w in ws)


def test_forget_table():
    f = lambda u: forget_unitary_32(CosetRep(3, 2, u)).cycle_string()  # noqa: E731
    assert f((2, 4)) == OMEGA_24
    assert f((1, 4)) == OMEGA_14
    assert f((1, 5)) == f((2, 3)) == OMEGA_15


def test_forget_untabulated():
    with pytest.raises(NotTabulated):
        forget_unitary_32(CosetRep(3, 2, (3, 4)))


def test_require_in_Wq():
    with pytest.raises(NotInWq):
        require_in_Wq(Permutation.from_cycles("(1,2)", 4), 2)
