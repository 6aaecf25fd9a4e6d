"""Buchberger's algorithm with optional cofactor tracking.

The reduced basis optionally carries a transform matrix so that any element
of the ideal can be written as a combination of the *input* generators, not
just of the basis.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .polyring import (
    MonomialOrder,
    Poly,
    PolyError,
    is_homogeneous,
    mono_div,
    mono_divides,
    mono_lcm,
    poly_sum,
)


class NotInIdeal(PolyError):
    pass


class NotZeroDimensional(PolyError):
    pass


class GroebnerBasis:
    """Reduced Gröbner basis of ``(generators)`` under ``order``.

    ``transform[k][i]`` is the coefficient of ``generators[i]`` in
    ``basis[k]`` (present only when built with ``track=True``).
    """

    def __init__(self, order: MonomialOrder, generators: list[Poly], basis: list[Poly],
                 transform: list[list[Poly]] | None):
        self.order = order
        self.generators = generators
        self.basis = basis
        self.transform = transform
        self.nvars = generators[0].nvars
        self.leading = [b.leading_monomial(order) for b in basis]
        self._nf_cache: dict[Poly, Poly] = {}

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def reduce(self, p: Poly) -> Poly:
        """Cached normal form (remainder only)."""
        r = self._nf_cache.get(p)
        if r is None:
            r = _divide(p, self.basis, self.leading, self.order, want_cofactors=False)[0]
            self._nf_cache[p] = r
        return r

    def contains(self, p: Poly) -> bool:
        return self.reduce(p).is_zero()

    def contains_ideal(self, other: GroebnerBasis | Sequence[Poly]) -> bool:
        gens = other.basis if isinstance(other, GroebnerBasis) else other
        return all(self.contains(p) for p in gens)

    def same_ideal(self, other: GroebnerBasis) -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __repr__(self):
        return f"GroebnerBasis({len(self.basis)} elements, {self.order.kind})"


def _divide(p: Poly, divisors: Sequence[Poly], leading: Sequence, order: MonomialOrder,
            want_cofactors: bool = True):
    """Full multivariate division. Returns ``(remainder, cofactors)``."""
    n = p.nvars
    rest = dict(p.terms)
    rem: dict = {}
    cof: list[dict] = [dict() for _ in divisors] if want_cofactors else []
    lcs = [d.terms[lm] for d, lm in zip(divisors, leading)]
    key = order.key
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        for k, lm in enumerate(leading):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                f = c / lcs[k]
                if want_cofactors:
                    cof[k][q] = cof[k].get(q, 0) + f
                for dm, dc in divisors[k].terms.items():
                    t = tuple(a + b for a, b in zip(dm, q))
                    v = rest.get(t, 0) - f * dc
                    if v:
                        rest[t] = v
                    else:
                        rest.pop(t, None)
                break
        else:
            rem[m] = c
            del rest[m]
    remainder = Poly._raw(n, rem)
    cofactors = [Poly(n, cd) for cd in cof] if want_cofactors else []
    return remainder, cofactors


def _spoly(f: Poly, g: Poly, order: MonomialOrder):
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    uf, ug = mono_div(lcm, mf), mono_div(lcm, mg)
    return uf, Fraction(1) / cf, ug, Fraction(1) / cg


def buchberger(gens: Sequence[Poly], order: MonomialOrder, track: bool = True) -> GroebnerBasis:
    """Reduced Gröbner basis with the normal selection strategy.

    With ``track`` each intermediate element carries its coefficient vector
    with respect to ``gens``.
    """
    gens = list(gens)
    if not gens:
        raise PolyError("empty generator list")
    n = gens[0].nvars
    s = len(gens)
    zero = Poly.zero(n)

    def unit_vec(i):
        return [Poly.const(1, n) if k == i else zero for k in range(s)]

    G: list[Poly] = []
    T: list[list[Poly]] = []

    def reduce_tracked(p: Poly, vec):
        if not G:
            return p, vec
        lead = [g.leading_monomial(order) for g in G]
        r, cof = _divide(p, G, lead, order, want_cofactors=track)
        if track:
            vec = [v - poly_sum((c * T[k][i] for k, c in enumerate(cof) if c), n)
                   for i, v in enumerate(vec)]
        return r, vec

    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        r, vec = reduce_tracked(g, unit_vec(i) if track else None)
        if r:
            G.append(r)
            T.append(vec)
    if not G:
        raise PolyError("all generators are zero")

    pairs = {(i, j) for j in range(len(G)) for i in range(j)}

    def pair_key(pr):
        i, j = pr
        return order.key(mono_lcm(G[i].leading_monomial(order), G[j].leading_monomial(order)))

    while pairs:
        pr = min(pairs, key=pair_key)
        pairs.discard(pr)
        i, j = pr
        li, lj = G[i].leading_monomial(order), G[j].leading_monomial(order)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading terms
        lcm = mono_lcm(li, lj)
        if _chain_criterion(i, j, lcm, G, order, pairs):
            continue
        ui, ci, uj, cj = _spoly(G[i], G[j], order)
        sp = G[i].mul_term(ui, ci) - G[j].mul_term(uj, cj)
        vec = None
        if track:
            vec = [T[i][k].mul_term(ui, ci) - T[j][k].mul_term(uj, cj) for k in range(s)]
        r, vec = reduce_tracked(sp, vec)
        if r:
            G.append(r)
            T.append(vec)
            new = len(G) - 1
            pairs |= {(k, new) for k in range(new)}

    return _autoreduce(gens, G, T if track else None, order)


def _chain_criterion(i, j, lcm, G, order, pairs) -> bool:
    # skip (i,j) if some k has LT(k) | lcm and both (i,k),(j,k) already processed
    for k in range(len(G)):
        if k in (i, j):
            continue
        if mono_divides(G[k].leading_monomial(order), lcm):
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                return True
    return False


def _autoreduce(gens, G, T, order) -> GroebnerBasis:
    n = gens[0].nvars
    s = len(gens)
    items = list(zip(G, T if T is not None else [None] * len(G)))
    # drop elements whose leading monomial is divisible by another's
    items.sort(key=lambda it: order.key(it[0].leading_monomial(order)))
    kept = []
    for g, t in items:
        lm = g.leading_monomial(order)
        if any(mono_divides(h.leading_monomial(order), lm) for h, _ in kept):
            continue
        kept.append((g, t))
    basis, trans = [], []
    for idx, (g, t) in enumerate(kept):
        others = [h for k, (h, _) in enumerate(kept) if k != idx]
        other_t = [u for k, (_, u) in enumerate(kept) if k != idx]
        lead = [h.leading_monomial(order) for h in others]
        # the leading term of g is never reduced, so divide only the tail
        lm, lc = g.leading_term(order)
        tail = g - Poly.monomial(lm, lc)
        r, cof = _divide(tail, others, lead, order, want_cofactors=T is not None)
        g2 = r + Poly.monomial(lm, lc)
        inv = Fraction(1) / lc
        basis.append(g2.scale(inv))
        if T is not None:
            t2 = [t[i] - poly_sum((c * other_t[k][i] for k, c in enumerate(cof) if c), n)
                  for i in range(s)]
            trans.append([x.scale(inv) for x in t2])
    # canonical ordering: descending by leading monomial
    order_idx = sorted(range(len(basis)), key=lambda k: order.key(basis[k].leading_monomial(order)),
                       reverse=True)
    basis = [basis[k] for k in order_idx]
    trans = [trans[k] for k in order_idx] if T is not None else None
    return GroebnerBasis(order, list(gens), basis, trans)


def normal_form(p: Poly, G: GroebnerBasis) -> tuple[Poly, list[Poly]]:
    """Return ``(nf, cofactors)`` with ``p = sum(cofactors[k] * G.basis[k]) + nf``."""
    return _divide(p, G.basis, G.leading, G.order, want_cofactors=True)


def standard_monomials(G: GroebnerBasis) -> list[tuple]:
    """Monomials outside the leading-term ideal, descending in the basis order.

    Raises NotZeroDimensional unless every variable has a pure power among
    the leading monomials.
    """
    n = G.nvars
    bounds = [None] * n
    for lm in G.leading:
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            bounds[i] = lm[i] if bounds[i] is None else min(bounds[i], lm[i])
        elif not nz:
            return []  # unit ideal
    if any(b is None for b in bounds):
        missing = [i for i, b in enumerate(bounds) if b is None]
        raise NotZeroDimensional(f"no pure power leading term for variables {missing}")
    out = [m for m in product(*(range(b) for b in bounds))
           if not any(mono_divides(lm, m) for lm in G.leading)]
    out.sort(key=G.order.key, reverse=True)
    return out


def lift_to_generators(p: Poly, G: GroebnerBasis) -> list[Poly]:
    """Coefficients ``a`` with ``p == sum(a[i] * G.generators[i])``.

    When ``p`` and every generator are homogeneous the coefficients are cut
    down to their homogeneous components of degree ``deg p - deg gens[i]``.
    """
    if G.transform is None:
        raise PolyError("Gröbner basis was built without transform tracking")
    nf, cof = normal_form(p, G)
    if nf:
        raise NotInIdeal("polynomial is not in the ideal")
    n = G.nvars
    s = len(G.generators)
    a = [poly_sum((c * G.transform[k][i] for k, c in enumerate(cof) if c), n) for i in range(s)]
    dp, pz = is_homogeneous(p)
    if pz:
        return [Poly.zero(n) for _ in range(s)]
    if dp is not None:
        degs = [is_homogeneous(g) for g in G.generators]
        if all(d is not None and not z for d, z in degs):
            a = [ai.homogeneous_part(dp - d) for ai, (d, _) in zip(a, degs)]
    return a
