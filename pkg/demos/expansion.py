"""Writing polynomials in powers of a regular sequence, and differentiating along it.

With g = (x^2 + yz, y^3, z^5) every polynomial q has a unique finite
expansion q = sum c_N g^N whose coefficients c_N are reduced modulo (g).
The g-partials act on the exponents N, not on the variables.
"""

from gwci import euler, g_expand, g_reconstruct, hatted_partial, make_frame, partial
from gwci.gframe import format_expansion

F = make_frame(["x", "y", "z"], "lex", ["x^2+y*z", "y^3", "z^5"])
print("quotient Q/(g) has dimension", len(F.std_basis))

q = F.parse("x^4*y^2 + x^2*y^3*z")
E = g_expand(q, F)
print("q =", F.format(q))
print("  =", format_expansion(E, F))
assert g_reconstruct(E, F) == q

for j in range(F.s):
    print(f"d/dg{j + 1} q =", F.format(partial(q, j, F)),
          f"   hatted: {F.format(hatted_partial(q, j, F))}")

# the g-Euler operator weights each term by its total g-degree
print("sum_j g_j d/dg_j q =", F.format(euler(q, F)))
