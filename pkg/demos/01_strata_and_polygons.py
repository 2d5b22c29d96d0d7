"""EO strata and Newton polygons for signature (3,2).

Lists the ten minimal coset representatives with their dimensions, then the
admissible Newton polygons, and shows the odd-breakpoint polygon that the
generator leaves out.
"""
from stratlab.polygons import admissible_polygons, lies_on_or_above, make_polygon, polygon_p_rank
from stratlab.weyl import coset_rep, enumerate_W, eo_dimension

for r in enumerate_W(3, 2):
    g = coset_rep(r)
    print(f"{r.label:14s} {g.cycle_string():16s} one-line {list(g.images)}  dim {eo_dimension(r)}")

print()
polys = admissible_polygons(3, 2)
for P in polys:
    print(f"{str(P):22s} p-rank {polygon_p_rank(P)}  breakpoints {P.breakpoints()}")

# symmetric and between the bounds, but it bends at x = 3
odd = make_polygon(5, [(1, 2, 1), (1, 1, 2), (2, 1, 1)])
print("\npretender", odd, "breakpoints", odd.breakpoints())
print("below the straight line:", lies_on_or_above(polys[0], odd))
print("above mu-ordinary:      ", lies_on_or_above(odd, polys[-1]))
print("admissible:             ", odd in polys)

# the order as a matrix: row lies on or above column
print()
for P in polys:
    print("".join(" x" if lies_on_or_above(P, Q) else " ." for Q in polys), "", P)
