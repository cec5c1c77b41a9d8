"""The reduced summation set behind each indicator.

nu_m(chi) only needs the h with (uh)^m = h^m. Their m-th powers land in C(u)
and are tallied by C(u)-conjugacy class; the tally Gamma_m(u, .) is then
paired with the character eta of C(u).
"""

from fsind import Permutation, get_engine

eng = get_engine(5)
u = Permutation.parse("(1,2)", 5)
for m in (2, 3, 4, 6):
    gs = eng.gamma_set(u, m)
    listing = ", ".join(f"[{c}, {y}]" for c, y in gs.pairs()) or "empty"
    print(f"S_5, u = {u}, m = {m}: {listing}   (|set| = {gs.total})")

# An odd u with an odd m never has a solution, so those columns are skipped.
print("\nodd u, odd m scan count:", eng.count_scan(u, 3))

# For even m an explicit element certifies that the set is non-empty.
from fsind.witness import even_m_witness, m3_witness

w = even_m_witness(Permutation.parse("(1,2,3,4,5)", 5), 2)
print(f"witness for (1,2,3,4,5), m=2: h = {w.h}, check {w.check()}")
w3 = m3_witness(Permutation.parse("(1,2,3,4,5,6,7)", 7))
print(f"witness for a 7-cycle, m=3: h = {w3.h} ({w3.kind}), check {w3.check()}")
