"""An independent check through the Hopf algebra D(G) itself.

The oracle builds the normalized integral Lambda, its m-th Sweedler power
Lambda^[m], and evaluates each induced character on it. A second route sums
z_m(u, y) eta(y) over C(u). Both must equal the engine.
"""

from fsind import Permutation, centralizer
from fsind.hopf import integral, lambda_power, s6_outer_automorphism
from fsind.verify import run_verification

s3 = centralizer(3, Permutation.identity(3))
lam = integral(s3)
print("Lambda has", len(lam.terms), "terms; Lambda^[2] has", len(lambda_power(s3, 2).terms))

for n in (3, 4):
    rep = run_verification(n)
    print(f"n={n}: {rep.compared} (character, m) pairs, {'all agree' if rep.ok else 'DISAGREEMENT'}")

# S_6 has an outer automorphism; it swaps the centralizers whose characters mix.
sigma = s6_outer_automorphism()
for text in ["(1,2)", "(1,2,3)", "(1,2,3)(4,5)"]:
    g = Permutation.parse(text, 6)
    print(f"sigma{g} = {sigma(g)}")
