"""Expansion calculus with respect to a homogeneous regular sequence g.

Every polynomial q has a unique finite expansion

    q = sum_N c_N * g^N

with each c_N in normal form modulo (g). Partial derivatives with respect
to the g_j act on the exponent N, treating the coefficients as constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence

from .groebner import GroebnerBasis, NotZeroDimensional, buchberger, lift_to_generators, standard_monomials
from .polyring import MonomialOrder, Poly, PolyError, PolyRing, is_homogeneous, parse_poly, poly_sum

Index = tuple  # multi-index N, tuple[int, ...] of length s
GExpansion = Dict[Index, Poly]


class FrameError(PolyError):
    pass


class NotHomogeneous(FrameError):
    def __init__(self, i: int):
        self.index = i
        super().__init__(f"g[{i}] is not homogeneous of positive degree")


class WrongCount(FrameError):
    pass


@dataclass(eq=False)
class GFrame:
    """Validated context: ring, order, g, Gröbner data and standard monomials."""

    ring: PolyRing
    g: list[Poly]
    gb: GroebnerBasis
    std_basis: list[tuple]
    degs: list[int]
    _expansions: dict = field(default_factory=dict, repr=False)
    _gpow: dict = field(default_factory=dict, repr=False)

    @property
    def vars(self):
        return self.ring.vars

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def s(self) -> int:
        return len(self.g)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def dim(self) -> int:
        return len(self.std_basis)

    def sigma(self, p: Poly) -> Poly:
        """The normal-form splitting: the standard representative of p mod (g)."""
        return self.gb.reduce(p)

    def gpow(self, N: Index) -> Poly:
        """g^N, memoized."""
        p = self._gpow.get(N)
        if p is None:
            p = Poly.const(1, self.nvars)
            for gi, e in zip(self.g, N):
                if e:
                    p = p * gi ** e
            self._gpow[N] = p
        return p

    def parse(self, text: str) -> Poly:
        return self.ring.parse(text)

    def format(self, p: Poly) -> str:
        return self.ring.format(p)


def make_frame(vars: Sequence[str] | PolyRing, order: str | MonomialOrder = "lex",
               g: Sequence[Poly | str] = ()) -> GFrame:
    """Validate g and build the frame.

    n homogeneous polynomials of positive degree in n variables with a
    zero-dimensional ideal form a regular sequence, so no separate
    regularity test is needed.
    """
    ring = vars if isinstance(vars, PolyRing) else PolyRing(vars, order)
    g = [ring.parse(x) if isinstance(x, str) else x for x in g]
    if len(g) != ring.nvars:
        raise WrongCount(f"need {ring.nvars} elements of g, got {len(g)}")
    degs = []
    for i, gi in enumerate(g):
        d, z = is_homogeneous(gi)
        if z or d is None or d == 0:
            raise NotHomogeneous(i)
        degs.append(d)
    gb = buchberger(g, ring.order, track=True)
    std = standard_monomials(gb)  # raises NotZeroDimensional
    return GFrame(ring, g, gb, std, degs)


def _add_into(target: dict, key, p: Poly):
    cur = target.get(key)
    if cur is None:
        if p:
            target[key] = p
    else:
        new = cur + p
        if new:
            target[key] = new
        else:
            del target[key]


def _expand_homogeneous(p: Poly, F: GFrame) -> GExpansion:
    s = F.s
    result: GExpansion = {}
    level = {(0,) * s: p}
    while level:
        nxt: dict = {}
        for N, q in level.items():
            c = F.sigma(q)
            if c:
                _add_into(result, N, c)
            r = q - c
            if not r:
                continue
            a = lift_to_generators(r, F.gb)
            for i, ai in enumerate(a):
                if ai:
                    M = N[:i] + (N[i] + 1,) + N[i + 1:]
                    _add_into(nxt, M, ai)
        level = nxt
    return result


def g_expand(q: Poly, F: GFrame) -> GExpansion:
    """The expansion of q as a dict N -> normal-form coefficient (memoized).

    Homogeneous components are expanded separately; lifting keeps every
    cofactor homogeneous of strictly smaller degree, so each expansion is
    finite. Normal forms are linear, so per-N sums stay reduced.
    """
    cached = F._expansions.get(q)
    if cached is not None:
        return dict(cached)
    result: GExpansion = {}
    for _, comp in sorted(q.homogeneous_components().items()):
        for N, c in _expand_homogeneous(comp, F).items():
            _add_into(result, N, c)
    F._expansions[q] = result
    return dict(result)


def g_reconstruct(E: GExpansion, F: GFrame) -> Poly:
    return poly_sum((c * F.gpow(N) for N, c in E.items()), F.nvars)


def _shift(N: Index, j: int, by: int = -1) -> Index:
    return N[:j] + (N[j] + by,) + N[j + 1:]


def _check_index(j: int, F: GFrame):
    if not 0 <= j < F.s:
        raise IndexError(f"g-index {j} out of range for s={F.s}")


def partial(q: Poly, j: int, F: GFrame) -> Poly:
    """d/dg_j (0-based j): sum_N N_j c_N g^(N - e_j)."""
    _check_index(j, F)
    E = g_expand(q, F)
    return poly_sum((c.scale(N[j]) * F.gpow(_shift(N, j)) for N, c in E.items() if N[j]),
                    F.nvars)


def hatted_partial(q: Poly, j: int, F: GFrame) -> Poly:
    """sum_N (N_j/|N|) c_N g^(N - e_j); the N = 0 term contributes nothing."""
    _check_index(j, F)
    E = g_expand(q, F)
    return poly_sum((c.scale(Fraction(N[j], sum(N))) * F.gpow(_shift(N, j))
                     for N, c in E.items() if N[j]), F.nvars)


def g_degree(q: Poly, F: GFrame) -> int | None:
    """Common |N| over the expansion, or None if q is not homogeneous in g.

    Zero counts as g-homogeneous of degree 0.
    """
    E = g_expand(q, F)
    if not E:
        return 0
    sizes = {sum(N) for N in E}
    return sizes.pop() if len(sizes) == 1 else None


def euler(q: Poly, F: GFrame) -> Poly:
    """sum_N |N| c_N g^N."""
    E = g_expand(q, F)
    return poly_sum((c.scale(sum(N)) * F.gpow(N) for N, c in E.items()), F.nvars)


def has_constant_coefficients(q: Poly, F: GFrame) -> bool:
    """True if every expansion coefficient lies in the base field."""
    return all(c.is_constant() for c in g_expand(q, F).values())


def g_names(F: GFrame) -> list[str]:
    names = [f"g{i + 1}" for i in range(F.s)]
    clash = set(names) & set(F.vars)
    if clash:
        raise FrameError(f"variable names {sorted(clash)} collide with g names")
    return names


def expansion_from_text(text: str, F: GFrame) -> GExpansion:
    """Read ``c_N * g^N`` notation, e.g. ``"y^2*g1^2 - z*g1*g2"``, as an expansion.

    Coefficients are taken as written; they are not reduced.
    """
    n = F.nvars
    p = parse_poly(text, list(F.vars) + g_names(F))
    out: GExpansion = {}
    for m, c in p.terms.items():
        _add_into(out, m[n:], Poly.monomial(m[:n], c))
    return out


def parse_with_g(text: str, F: GFrame) -> Poly:
    """Parse a polynomial that may mention g1..gs, substituting the frame's g."""
    return g_reconstruct(expansion_from_text(text, F), F)


def format_expansion(E: GExpansion, F: GFrame) -> str:
    """Inverse of ``expansion_from_text`` up to term order."""
    n = F.nvars
    terms = {}
    for N, c in E.items():
        for m, a in c.terms.items():
            terms[m + tuple(N)] = a
    ext = PolyRing(list(F.vars) + g_names(F), "lex")
    return ext.format(Poly(n + F.s, terms))


def expansion_to_json(E: GExpansion, F: GFrame) -> list[dict]:
    return [{"N": list(N), "coeff": F.format(E[N])} for N in sorted(E)]


def expansion_from_json(data: list[dict], F: GFrame) -> GExpansion:
    out: GExpansion = {}
    for item in data:
        N = tuple(int(x) for x in item["N"])
        if len(N) != F.s:
            raise FrameError(f"index {N} has wrong length for s={F.s}")
        _add_into(out, N, F.parse(item["coeff"]))
    return out


__all__ = [
    "GFrame", "GExpansion", "make_frame", "g_expand", "g_reconstruct", "partial",
    "hatted_partial", "g_degree", "euler", "has_constant_coefficients",
    "NotHomogeneous", "NotZeroDimensional", "WrongCount", "FrameError",
    "expansion_to_json", "expansion_from_json", "expansion_from_text", "parse_with_g",
    "format_expansion", "g_names",
]
