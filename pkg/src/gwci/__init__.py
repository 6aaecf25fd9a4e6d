"""Koszul homology generators for modules resolved inside (g).

Exact rational arithmetic throughout; see README for a tour.
"""

from .polyring import MonomialOrder, ParseError, Poly, PolyError, PolyRing, format_poly, parse_poly
from .groebner import GroebnerBasis, NotInIdeal, NotZeroDimensional, buchberger, lift_to_generators, normal_form, standard_monomials
from .gframe import (GFrame, euler, expansion_from_text, g_degree, g_expand, g_reconstruct,
                     has_constant_coefficients, hatted_partial, make_frame, parse_with_g, partial)
from .koszul import KoszulElement, delta, form_from_json, form_to_json, format_form, h_nabla, nabla, sigma_pi, wedge
from .resolution import (FreeResolution, NotAComplex, NotGWCI, check_gwci, check_minimal, homology_rank,
                         load_resolution, rewrite_in_g, taylor_resolution)
from .perturb import TotalElement, check_retract, check_small, sigma_tilde, total_diff
from .generators import (GeneratorSet, compute_generators, d_constant, generators_g_homogeneous,
                         generators_k_coeff, generators_main, generators_via_retract, jacobian_det,
                         relative_sign)
from .wci import (MasseyTable, check_prop_sufficient, cycle_products, partial_ideal, products_vanish,
                  verify_massey)
from .problem import Problem, fixture, load_problem

__version__ = "0.1.0"
