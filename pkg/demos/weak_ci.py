"""Is (g) a weak complete intersection in Q/I?

A sufficient test: the square of the derived ideal (all g-partials of
elements of I) lies in I. When it fails, a nonzero product of degree-1
cycles shows the Koszul homology algebra is not trivially multiplied, and a
Massey table records the chosen nullhomotopies.
"""

from gwci import (MasseyTable, check_prop_sufficient, cycle_products, fixture, format_form,
                  generators_main, partial_ideal, verify_massey)
from gwci.problem import fixture_data

A = fixture("gmonomial_plane")
J = partial_ideal(A.ideal, A.frame)
print("monomial ideal in g: derived ideal", [A.frame.format(b) for b in J.basis])
print("  square inside I:", check_prop_sufficient(A.ideal, A.frame).condition_holds)

B = fixture("powers235_massey")
F = B.frame
r = check_prop_sufficient(B.ideal, F)
print("powers of variables: square inside I:", r.condition_holds, " witness", F.format(r.witness))

z = generators_main(B.resolution, F, 1, B.gbI)
for (a, b), w in sorted(cycle_products(list(z), B.gbI).items()):
    if w and a < b:
        print(f"  z{a} z{b} = {format_form(w, F)}")

T = MasseyTable.from_json(fixture_data("powers235_massey")["massey"], F)
rep = verify_massey(T, F, B.gbI, 4)
print(f"Massey table: {rep.checked} tuples, valid {rep.ok}")
