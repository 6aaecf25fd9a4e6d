"""The perturbed inclusion on the total complex of F (x) K(g).

Starting from h (x) 1, repeatedly apply the resolution differential and the
de Rham contraction until the terms die out. The sum is an honest cycle
of the total complex; its bottom row is the Koszul homology class.
"""

from gwci import check_small, fixture, format_form, sigma_tilde, total_diff

P = fixture("powers235_small")
F, R = P.frame, P.resolution
print("nilpotent perturbation:", check_small(R, F))

for ell in range(1, R.length + 1):
    for j in range(R.ranks[ell]):
        w = sigma_tilde(R, F, ell, j)
        assert not total_diff(w, R, F)
        print(f"h{ell}_{j + 1}: bottom row {format_form(w.component(0, 0), F)}")
