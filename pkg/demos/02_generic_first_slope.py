"""Final sequences and the generic first slope.

For the three tabulated permutations, compute the final sequence, run the
phi-tilde iteration by hand so each step is visible, and compare the
resulting bound with the first slopes of the admissible polygons.
"""
from stratlab.finalseq import final_sequence_from_permutation, generic_first_slope, phi_tilde
from stratlab.polygons import admissible_polygons, first_slope
from stratlab.strata import compatible_polygons
from stratlab.weyl import CosetRep, forget_unitary_32

polys = admissible_polygons(3, 2)

for u in [(1, 4), (1, 5), (2, 3), (2, 4)]:
    w = forget_unitary_32(CosetRep(3, 2, u))
    phi = final_sequence_from_permutation(w, 5)
    print(f"gamma_{{{u[0]},{u[1]}}}  omega = {w.cycle_string()}")
    print("  phi =", phi)

    S = set(range(1, 11))
    while True:
        nxt = {phi_tilde(phi, i) for i in S}
        print("  ", sorted(S), "->", sorted(nxt))
        if nxt == S:
            break
        S = nxt

    lam, D, C = generic_first_slope(phi, with_sets=True)
    print(f"  D = {sorted(D)}  C = {sorted(C)}  lambda = {lam}")
    survivors = compatible_polygons(lam, polys)
    print("  polygons with first slope >= lambda:", [str(P) for P in survivors])
    print()

print("first slopes:", {str(P): str(first_slope(P)) for P in polys})
