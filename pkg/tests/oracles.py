"""Independent oracles: sympy conversions and a brute-force derived ideal."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import sympy

from gwci.gframe import GFrame, partial
from gwci.polyring import Poly
from gwci.wci import ideal_basis


def to_sympy(p: Poly, names):
    syms = sympy.symbols(list(names))
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, m):
            term *= s ** e
        expr += term
    return expr


def from_sympy(expr, names) -> Poly:
    syms = sympy.symbols(list(names))
    P = sympy.Poly(sympy.expand(expr), *syms, domain="QQ")
    terms = {}
    for m, c in P.terms():
        terms[tuple(m)] = Fraction(int(c.numerator), int(c.denominator))
    return Poly(len(names), terms)


def random_poly(rng: random.Random, nvars: int, max_deg: int = 6, max_terms: int = 5) -> Poly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(0, max_deg)
        m = [0] * nvars
        for _ in range(d):
            m[rng.randrange(nvars)] += 1
        terms[tuple(m)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return Poly(nvars, terms)


def monomials_up_to(nvars: int, D: int):
    for m in product(range(D + 1), repeat=nvars):
        if sum(m) <= D:
            yield m


def brute_partial_ideal(I_gens, F: GFrame, D: int):
    """Ideal generated by d/dg_j(m * f) over monomials m of degree <= D.

    Every element of I is a k-combination of such products m * f, and d/dg_j
    is k-linear, so these generate the derived ideal as D grows.
    """
    gens = []
    for f in I_gens:
        for m in monomials_up_to(F.nvars, D):
            mf = f * Poly.monomial(m)
            for j in range(F.s):
                gens.append(partial(mf, j, F))
    return ideal_basis([g for g in gens if g] or [Poly.zero(F.nvars)], F)
