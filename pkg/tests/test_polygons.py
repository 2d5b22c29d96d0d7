from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BETA_SS
from stratlab.errors import (
    BadSignature,
    DimensionMismatch,
    HeightMismatch,
    NotCoprime,
    NotSymmetric,
    QMismatch,
)
from stratlab.polygons import (
    NewtonPolygon,
    admissible_polygons,
    all_symmetric_polygons,
    first_slope,
    format_slopes,
    lies_on_or_above,
    make_polygon,
    mu_ordinary,
    polygon_p_rank,
    supersingular,
)

F = Fraction


def test_make_polygon_examples(betas):
    assert make_polygon(5, BETA_SS) == betas["beta_ss"]
    assert format_slopes(betas["beta_ss"]) == "[1/2^5]"
    assert format_slopes(make_polygon(5, [(3, 1, 1), (1, 1, 1), (1, 3, 1)])) == "[1/4, 1/2, 3/4]"
    assert str(betas["beta_max"]) == "[0^4, 1/2, 1^4]"


@pytest.mark.parametrize("factors, err", [
    ([(0, 1, 4), (1, 0, 4)], DimensionMismatch),
    ([(1, 1, 5), (0, 1, 1)], HeightMismatch),
    ([(1, 2, 2), (3, 1, 1)], NotSymmetric),
    ([(2, 2, 2), (1, 1, 1)], NotCoprime),
])
def test_make_polygon_errors(factors, err):
    with pytest.raises(err):
        make_polygon(5, factors)


def test_first_slope_and_p_rank(betas):
    assert first_slope(betas["beta_1"]) == F(1, 4)
    assert first_slope(betas["beta_ss"]) == F(1, 2)
    assert first_slope(betas["beta_max"]) == 0
    assert polygon_p_rank(betas["beta_max"]) == 4
    assert polygon_p_rank(betas["beta_2"]) == 2
    assert polygon_p_rank(betas["beta_ss"]) == 0


def test_order_examples(betas):
    b = betas
    assert lies_on_or_above(b["beta_ss"], b["beta_ss"])
    assert lies_on_or_above(b["beta_ss"], b["beta_1"])
    assert lies_on_or_above(b["beta_1"], b["beta_2"])
    assert not lies_on_or_above(b["beta_2"], b["beta_1"])
    assert b["beta_1"].heights()[2] == F(1, 2)


def test_order_rejects_mixed_q():
    with pytest.raises(QMismatch):
        lies_on_or_above(supersingular(2), supersingular(3))


def test_mu_ordinary():
    assert mu_ordinary(3, 2).factors == ((0, 1, 4), (1, 1, 1), (1, 0, 4))
    assert mu_ordinary(4, 0) == supersingular(4)
    assert mu_ordinary(2, 1).factors == ((0, 1, 2), (1, 1, 1), (1, 0, 2))
    with pytest.raises(BadSignature):
        mu_ordinary(2, 3)


def test_admissible_32(betas):
    got = admissible_polygons(3, 2)
    assert got == [betas[k] for k in ("beta_ss", "beta_1", "beta_2", "beta_max")]
    pretender = make_polygon(5, [(1, 2, 1), (1, 1, 2), (2, 1, 1)])
    assert lies_on_or_above(betas["beta_ss"], pretender)
    assert lies_on_or_above(pretender, betas["beta_max"])
    assert pretender not in got
    assert {polygon_p_rank(P) for P in got} == {0, 2, 4}


def test_admissible_small():
    assert [str(P) for P in admissible_polygons(1, 1)] == ["[1/2^2]", "[0^2, 1^2]"]
    assert [str(P) for P in admissible_polygons(1, 0)] == ["[1/2]"]
    assert [str(P) for P in admissible_polygons(2, 1)] == ["[1/2^3]", "[0^2, 1/2, 1^2]"]
    with pytest.raises(BadSignature):
        admissible_polygons(1, 2)


def test_json_round_trip(betas):
    for P in betas.values():
        assert NewtonPolygon.from_json(P.to_json()) == P
    assert betas["beta_max"].to_json() == {"q": 5, "factors": [[0, 1, 4], [1, 1, 1], [1, 0, 4]]}


def _valid(P):
    sl = P.slopes()
    assert sum(h for _, h in sl) == 2 * P.q
    assert sum(s * h for s, h in sl) == P.q
    assert sorted(1 - s for s, _ in sl) == [s for s, _ in sl]


@pytest.mark.parametrize("q", range(1, 8))
def test_generated_polygons_valid(q):
    for P in all_symmetric_polygons(q):
        _valid(P)
    for a in range(q, (q - 1) // 2, -1):
        for P in admissible_polygons(a, q - a):
            _valid(P)


_POOLS = {q: all_symmetric_polygons(q) for q in range(1, 9)}
triples = st.integers(1, 8).flatmap(lambda q: st.tuples(*[st.sampled_from(_POOLS[q])] * 3))


@settings(max_examples=1000, deadline=None)
@given(triples)
def test_order_is_partial_order(t):
    P, Q, R = t
    assert lies_on_or_above(P, P)
    if lies_on_or_above(P, Q) and lies_on_or_above(Q, P):
        assert P == Q
    if lies_on_or_above(P, Q) and lies_on_or_above(Q, R):
        assert lies_on_or_above(P, R)
    # the straight line is the top element
    assert lies_on_or_above(supersingular(P.q), P)
