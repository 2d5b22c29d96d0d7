"""The rank-10 witness module: axioms, slopes and its EO class.

Builds the integer module at a few primes, checks the seven conditions,
computes the slopes twice (matrix powers and characteristic polynomial),
then reduces mod p and walks the canonical filtration down to eta and the
EO class.
"""
from stratlab.crystal import charpoly, isoclinic_check, newton_slopes, reduce_mod_p, table1_module, verify_axioms
from stratlab.modp import canonical_filtration, eo_class_from_eta, final_sequence_of_module, unitary_eta
from stratlab.weyl import coset_rep

m = table1_module(3)
print(verify_axioms(m))

for p in (3, 5, 7, 11):
    mp = table1_module(p)
    iso = isoclinic_check(mp, 10)
    print(f"p={p:2d}  F^{iso.N} = p^{iso.s} U   char-poly slopes {newton_slopes(mp)}")

print("char poly at p=3 (constant term first):", charpoly(m.A_F))

N = reduce_mod_p(m)
print("\ncanonical filtration of M/pM:")
for C in canonical_filtration(N):
    print(f"  dim {C.dim:2d}  {N.describe(C)}")

eta = unitary_eta(N)
cls = eo_class_from_eta(eta, 3, 2)
print("eta_1 =", eta.values, "->", cls.label, "=", coset_rep(cls).cycle_string())
print("final sequence of M/pM:", final_sequence_of_module(N))
