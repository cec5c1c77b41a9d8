"""Exact character tables of centralizers, with cyclotomic values.

Tables come from Dixon-Schneider over a prime field, lifted to exact values
in Q(zeta_e). Values print in E(N)^k notation.
"""

from fsind import Permutation, centralizer, character_table
from fsind.cyclo import E, parse, to_text

u = Permutation.parse("(1,2,3)", 5)
tab = character_table(centralizer(5, u))
print(f"C_S5({u}) has order {tab.order} and {len(tab)} classes")
print("class reps:", [str(r) for r in tab.reps])
for j, row in enumerate(tab.values, 1):
    print(f"  eta_{j}: " + "  ".join(to_text(v) for v in row))

tab.check_orthogonality()
print("row and column orthogonality hold exactly")

# Cyclotomic arithmetic on its own.
z = E(3)
print("\nE(3) + E(3)^2 =", to_text(z + z * z))
print("parse('2*E(3)^2') * E(3) =", to_text(parse("2*E(3)^2") * z))
