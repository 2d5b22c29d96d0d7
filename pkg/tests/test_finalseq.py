from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import OMEGA_14, OMEGA_15
from stratlab.errors import IndexOutOfRange, InvalidFinalSequence, NotInWq
from stratlab.finalseq import (
    FinalSequence,
    final_sequence_from_permutation,
    generic_first_slope,
    phi_tilde,
    stable_set,
)
from stratlab.weyl import Permutation, enumerate_Wq

PHI_14 = [0, 0, 1, 1, 2, 2, 3, 3, 4, 5]
PHI_15 = [0, 1, 1, 1, 2, 2, 3, 4, 4, 5]
SUPERSPECIAL = [0, 0, 0, 0, 0, 1, 2, 3, 4, 5]


def phi_of(cycles):
    return final_sequence_from_permutation(Permutation.from_cycles(cycles, 10), 5)


def test_from_permutation_anchors():
    assert phi_of(OMEGA_14).values() == PHI_14
    assert phi_of(OMEGA_15).values() == PHI_15
    ident = final_sequence_from_permutation(Permutation.identity(10), 5)
    assert ident.phi == (0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5)
    assert str(phi_of(OMEGA_14)) == "[0,0,1,1,2,2,3,3,4,5]"


def test_rejects_non_Wq():
    with pytest.raises(NotInWq):
        final_sequence_from_permutation(Permutation.from_cycles("(1,2)", 10), 5)


@pytest.mark.parametrize("values", [
    [1, 1, 1, 1, 2, 2, 3, 4, 4, 5],   # first step from 0 fine but symmetry broken
    [0, 2, 2, 2, 2, 2, 3, 4, 4, 5],   # jump of 2
    [0, 1, 0, 1, 2, 2, 3, 4, 4, 5],   # decreasing
    [0, 0, 0, 0, 0, 1, 2, 3, 4],      # wrong length
])
def test_invalid_sequences(values):
    with pytest.raises(InvalidFinalSequence):
        FinalSequence.from_values(values)


def test_phi_tilde():
    f = FinalSequence.from_values(PHI_15)
    assert phi_tilde(f, 1) == 6
    assert phi_tilde(f, 2) == 1
    assert phi_tilde(f, 10) == 5
    for i in (0, 11):
        with pytest.raises(IndexOutOfRange):
            phi_tilde(f, i)


def test_generic_first_slope_anchors():
    assert generic_first_slope(FinalSequence.from_values(PHI_14)) == Fraction(2, 5)
    lam, D, C = generic_first_slope(FinalSequence.from_values(PHI_15), with_sets=True)
    assert lam == Fraction(1, 3)
    assert D == {1, 2, 6} and C == {6}
    assert generic_first_slope(FinalSequence.from_values(SUPERSPECIAL)) == Fraction(1, 2)


def test_hand_iteration_phi_14():
    # stable set worked out by hand
    _, D, C = generic_first_slope(FinalSequence.from_values(PHI_14), with_sets=True)
    assert D == {1, 2, 3, 6, 7} and C == {6, 7}


def _check_invariants(f: FinalSequence):
    q = f.q
    phi = f.phi
    assert phi[0] == 0
    assert all(phi[i - 1] <= phi[i] <= phi[i - 1] + 1 for i in range(1, 2 * q + 1))
    assert all(phi[2 * q - i] == q - i + phi[i] for i in range(2 * q + 1))
    assert sum(phi[i] - phi[i - 1] for i in range(1, 2 * q + 1)) == q


@pytest.mark.parametrize("q", range(1, 7))
def test_every_Wq_element_gives_final_sequence(q):
    for w in enumerate_Wq(q):
        f = final_sequence_from_permutation(w, q)
        _check_invariants(f)
        lam = generic_first_slope(f)
        assert 0 <= lam <= Fraction(1, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 7).flatmap(lambda q: st.sampled_from([final_sequence_from_permutation(w, q)
                                                            for w in enumerate_Wq(q)])))
def test_iteration_shrinks_and_stabilises(f):
    q = f.q
    S = frozenset(range(1, 2 * q + 1))
    steps = 0
    while True:
        nxt = frozenset(phi_tilde(f, i) for i in S)
        assert nxt <= S
        if nxt == S:
            break
        S = nxt
        steps += 1
    assert steps <= 2 * q
    assert S == stable_set(f)
