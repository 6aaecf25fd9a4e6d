"""Closed forms for special resolutions.

When every matrix entry is g-homogeneous the hatted partials collapse to
ordinary g-derivatives scaled by reciprocal degree sums. When the entries
have constant coefficients in g the generators are sums of Jacobian
determinants. Both are compared with the general iterated formula.
"""

from gwci import (d_constant, fixture, format_form, generators_g_homogeneous, generators_k_coeff,
                  generators_main, relative_sign)

P = fixture("powers235_massey")
for ell in (1, 2):
    a = generators_main(P.resolution, P.frame, ell, P.gbI)
    b = generators_g_homogeneous(P.resolution, P.frame, ell, P.gbI)
    print(f"g-homogeneous route, degree {ell}: equal to formula {list(a) == list(b)}")

print("D-constant for g-degrees (1, 2):", d_constant([1, 2]))

H = fixture("variables_xy")
for ell in (1, 2):
    k = generators_k_coeff(H.resolution, H.frame, ell, H.gbI)
    m = generators_main(H.resolution, H.frame, ell, H.gbI)
    print(f"Jacobian route, degree {ell}:", [format_form(z, H.frame) for z in k],
          "sign vs formula", relative_sign(m, k))
