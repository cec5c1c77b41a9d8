"""Higher Frobenius-Schur indicators of D(S_n) and their I-equivalence classes.

Every irreducible character of the Drinfel'd double D(S_n) is induced from an
irreducible character eta of a centralizer C(u), one u per conjugacy class.
For each such character the engine computes nu_m for every divisor m of the
exponent of S_n; any other m reduces to gcd(m, e).
"""

from fsind import compute_matrix, reduce_matrix
from fsind.engine import Label

mat = compute_matrix(4)
print(f"D(S_4): exponent {mat.exponent}, divisors {list(mat.divisors)}")
print(f"{len(mat.labels())} irreducible characters\n")

for lab, row in mat.labelled_rows():
    print(f"  {str(lab):8} {row}")

# Rows that agree for every m are I-equivalent.
print("\nI-equivalence classes:")
for cl in reduce_matrix(mat):
    kind = "homogeneous" if cl.homogeneous else "mixed"
    print(f"  {cl.row}  <- {', '.join(map(str, cl.members))} ({kind})")

# nu_m for an m that is not a divisor comes from gcd(m, 12).
print("\nnu_18(chi_3.1) =", mat.value(Label(3, 1), 18), "= nu_6(chi_3.1) =", mat.value(Label(3, 1), 6))

# The larger groups are a call away; S_6 shows its three mixed classes.
mixed = {tuple(sorted(c.centralizers)) for c in reduce_matrix(compute_matrix(6)) if not c.homogeneous}
print("S_6 mixed classes pair centralizers", sorted(mixed))
