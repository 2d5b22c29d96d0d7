"""The EO x Newton interaction table for M(3,2).

Runs the rule cascade and prints the table with the rules that decided
each cell, then the witness certificate behind the one row that meets two
Newton strata.
"""
from stratlab.strata import RULES, classify_32, supersingular_witness

table = classify_32()
print(table.to_markdown())

for tag, text in RULES.items():
    print(f"{tag:16s} {text}")

print()
print(supersingular_witness(5))

rows = [s.label for s in table.strata if sum(str(x) != "Empty" for x in table.row(s.gamma.u)) > 1]
print("\nrows meeting more than one Newton stratum:", rows)
