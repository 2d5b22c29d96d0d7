"""Minimal modules built from Newton polygons.

Each admissible polygon gives a direct sum of cyclic modules. Its p-rank
matches the polygon, and for the slope-1/4 polygon the final sequence agrees
with the one from the tabulated permutation. A batch of random flag
refinements shows the final sequence does not depend on the choice.
"""
import random

from stratlab.finalseq import final_sequence_from_permutation
from stratlab.modp import final_sequence_of_module, minimal_module, semilinear_rank_stable
from stratlab.polygons import admissible_polygons, polygon_p_rank
from stratlab.weyl import CosetRep, forget_unitary_32

for P in admissible_polygons(3, 2):
    M = minimal_module(P, 5)
    print(f"{str(P):22s} p-rank {semilinear_rank_stable(M)} (polygon {polygon_p_rank(P)})"
          f"  phi {final_sequence_of_module(M)}")

beta_1 = admissible_polygons(3, 2)[1]
M = minimal_module(beta_1, 3)
w = forget_unitary_32(CosetRep(3, 2, (2, 4)))
print("\nfrom the module:     ", final_sequence_of_module(M))
print("from the permutation:", final_sequence_from_permutation(w, 5))

seen = {str(final_sequence_of_module(M, rng=random.Random(seed))) for seed in range(200)}
print("distinct results over 200 random refinements:", seen)
