"""Acceptance criteria 1-9, one check each.

Run under pytest (one PASS/FAIL line per criterion is printed even without
``-s``) or directly: ``python3 tests/test_acceptance.py``.
"""

import random
import sys
from fractions import Fraction

import pytest

from stratlab.crystal import isoclinic_check, newton_slopes, reduce_mod_p, table1_module, verify_axioms, vp_det
from stratlab.finalseq import final_sequence_from_permutation, generic_first_slope
from stratlab.modp import (
    eo_class_from_eta,
    final_sequence_of_module,
    invariant_failures,
    minimal_module,
    superspecial_unitary_module,
    unitary_eta,
)
from stratlab.polygons import admissible_polygons, all_symmetric_polygons, lies_on_or_above, make_polygon
from stratlab.strata import classify_32
from stratlab.weyl import Permutation, coset_rep, enumerate_W, eo_dimension

BETA = {
    "beta_ss": [(1, 1, 5)],
    "beta_1": [(1, 3, 1), (1, 1, 1), (3, 1, 1)],
    "beta_2": [(0, 1, 2), (1, 1, 3), (1, 0, 2)],
    "beta_max": [(0, 1, 4), (1, 1, 1), (1, 0, 4)],
}

# the classification result, written out by hand (E = Empty, C = ContainedIn,
# I = Intersects, Q = Equal); columns beta_ss, beta_1, beta_2, beta_max
EXPECTED_TABLE = {
    (1, 2): "CEEE",
    (1, 3): "CEEE",
    (1, 4): "CEEE",
    (1, 5): "CEEE",
    (2, 3): "CEEE",
    (2, 4): "ECEE",
    (2, 5): "EECE",
    (3, 4): "IIEE",
    (3, 5): "EECE",
    (4, 5): "EEEQ",
}
CODE = {"Empty": "E", "ContainedIn": "C", "Intersects": "I", "Equal": "Q"}


def _inversions(w):
    n = len(w.images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w.images[i] > w.images[j])


def c1_enumeration():
    reps = enumerate_W(3, 2)
    dims = [eo_dimension(r) for r in reps]
    ok = len(reps) == 10 and dims == [0, 1, 2, 3, 2, 3, 4, 4, 5, 6]
    ok &= all(d == r.u[0] + r.u[1] - 3 == _inversions(coset_rep(r)) for r, d in zip(reps, dims))
    return ok, f"dims {dims}"


def c2_admissibility():
    got = admissible_polygons(3, 2)
    want = [make_polygon(5, BETA[k]) for k in ("beta_ss", "beta_1", "beta_2", "beta_max")]
    pretender = make_polygon(5, [(1, 2, 1), (1, 1, 2), (2, 1, 1)])
    ok = set(got) == set(want) and len(got) == 4 and pretender not in got
    return ok, ", ".join(map(str, got))


def c3_generic_slopes():
    phi14 = final_sequence_from_permutation(Permutation.from_cycles("(3,6,4)(5,7,8)", 10), 5)
    phi15 = final_sequence_from_permutation(Permutation.from_cycles("(2,6,4,3)(5,7,8,9)", 10), 5)
    lam14 = generic_first_slope(phi14)
    lam15, D, C = generic_first_slope(phi15, with_sets=True)
    ok = lam14 == Fraction(2, 5) and lam15 == Fraction(1, 3) and D == {1, 2, 6} and C == {6}
    return ok, f"lambda_14 = {lam14}, lambda_15 = {lam15}, D = {sorted(D)}, C = {sorted(C)}"


def c4_axioms():
    results = {p: verify_axioms(table1_module(p)) for p in (3, 5, 7, 11)}
    ok = all(r.passed and len(r.checks) == 7 for r in results.values())
    return ok, "; ".join(f"p={p}: {sum(c.passed for c in r.checks)}/7" for p, r in results.items())


def c5_supersingular():
    notes = []
    ok = True
    for p in (3, 5, 7, 11):
        m = table1_module(p)
        iso = isoclinic_check(m, 10)
        slopes = newton_slopes(m)
        ok &= iso is not None and iso.slope == Fraction(1, 2) and slopes.parts == ((Fraction(1, 2), 10),)
        notes.append(f"p={p}: F^{iso.N}=p^{iso.s}U, char-poly {slopes}" if iso else f"p={p}: none")
    return ok, "; ".join(notes)


def c6_modp_pipeline():
    notes = []
    ok = True
    for p in (3, 5, 7, 11):
        eta = unitary_eta(reduce_mod_p(table1_module(p)))
        cls = eo_class_from_eta(eta, 3, 2)
        ok &= eta.values == (0, 0, 1, 2, 2) and cls.u == (3, 4) and coset_rep(cls).cycle_string() == "(1,3)(2,4)"
        notes.append(f"p={p}: eta={eta.values} -> {cls.label}")
    return ok, "; ".join(notes)


def c7_minimal_module():
    lhs = final_sequence_of_module(minimal_module(make_polygon(5, BETA["beta_1"]), 3))
    rhs = final_sequence_from_permutation(Permutation.from_cycles("(2,6,8,4)(3,7,9,5)", 10), 5)
    return lhs == rhs, f"module {lhs} vs permutation {rhs}"


def c8_classification():
    table = classify_32()
    got = {s.gamma.u: "".join(CODE[str(x)] for x in table.row(s.gamma.u)) for s in table.strata}
    ok = got == EXPECTED_TABLE and table.names == ["beta_ss", "beta_1", "beta_2", "beta_max"]
    ok &= [table.polygons[j] for j in range(4)] == [make_polygon(5, BETA[n]) for n in table.names]
    doubles = [u for u, row in got.items() if sum(ch != "E" for ch in row) == 2]
    multi = [u for u, row in got.items() if sum(ch != "E" for ch in row) > 1]
    ok &= doubles == multi == [(3, 4)]
    mismatches = [u for u in EXPECTED_TABLE if got.get(u) != EXPECTED_TABLE[u]]
    return ok, f"40 cells, mismatched rows {mismatches}, rows with two non-empty cells {doubles}"


def c9_properties():
    notes = []
    # BT1 invariants on the built-in mod-p modules
    mods = [minimal_module(P, p) for p in (3, 5) for P in admissible_polygons(3, 2)]
    mods += [superspecial_unitary_module(3, 2, p) for p in (3, 5)]
    mods += [reduce_mod_p(table1_module(p)) for p in (3, 5, 7, 11)]
    bt1 = all(invariant_failures(m) == [] and m.F.kernel() == m.V.image() and m.V.kernel() == m.F.image()
              for m in mods)
    notes.append(f"BT1 on {len(mods)} modules")
    # partial-order laws on random symmetric polygons
    rng = random.Random(20240601)
    pools = {q: all_symmetric_polygons(q) for q in range(1, 9)}
    order = True
    cases = 1200
    for _ in range(cases):
        q = rng.randrange(1, 9)
        P, Q, R = (rng.choice(pools[q]) for _ in range(3))
        order &= lies_on_or_above(P, P)
        if lies_on_or_above(P, Q) and lies_on_or_above(Q, P):
            order &= P == Q
        if lies_on_or_above(P, Q) and lies_on_or_above(Q, R):
            order &= lies_on_or_above(P, R)
    notes.append(f"order laws on {cases} triples")
    # refinement independence
    m = minimal_module(make_polygon(5, BETA["beta_1"]), 3)
    t1 = reduce_mod_p(table1_module(3))
    ref_m, ref_t = final_sequence_of_module(m), final_sequence_of_module(t1)
    refine = all(final_sequence_of_module(m, rng=random.Random(s)) == ref_m for s in range(60))
    refine &= all(final_sequence_of_module(t1, rng=random.Random(s)) == ref_t for s in range(60))
    notes.append("120 random refinements")
    # determinant valuation on axiom-passing crystals
    det = all(vp_det(table1_module(p).A_F, p) == 5 for p in (3, 5, 7, 11) if verify_axioms(table1_module(p)).passed)
    notes.append("v_p(det A_F) = q")
    ok = bt1 and order and refine and det
    return ok, ", ".join(notes) + f" [{bt1}, {order}, {refine}, {det}]"


CRITERIA = [
    (1, "enumeration", c1_enumeration),
    (2, "admissible polygons", c2_admissibility),
    (3, "generic first slopes", c3_generic_slopes),
    (4, "crystal axioms", c4_axioms),
    (5, "supersingularity, two methods", c5_supersingular),
    (6, "mod-p pipeline", c6_modp_pipeline),
    (7, "minimal-module correspondence", c7_minimal_module),
    (8, "classification table", c8_classification),
    (9, "property suites", c9_properties),
]


def _line(num, name, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num} ({name}): {detail}"


@pytest.mark.parametrize("num, name, check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, name, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(_line(num, name, ok, detail))
    sys.exit(1 if failed else 0)
