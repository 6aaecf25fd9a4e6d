"""The Koszul complex on g: exterior forms in dg_0, ..., dg_{s-1} over Q.

Index tuples are 0-based and stored strictly increasing; the JSON form is
1-based to match the usual dg_1, ..., dg_s notation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .gframe import GFrame, g_expand, partial
from .polyring import Poly, PolyError, exact_scalar


def sort_sign(idx: Iterable[int]) -> tuple[int, tuple]:
    """Sort an index sequence; return (sign, sorted tuple), sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # bubble sort parity, fine for the tiny lengths used here
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


class KoszulElement:
    """A homogeneous form of degree ``degree``: map sorted index tuple -> Poly."""

    __slots__ = ("degree", "nvars", "terms")

    def __init__(self, degree: int, nvars: int, terms: Mapping[tuple, Poly] | None = None):
        self.degree = degree
        self.nvars = nvars
        clean: dict = {}
        for idx, c in (terms or {}).items():
            if len(idx) != degree:
                raise PolyError(f"index tuple {idx} does not have length {degree}")
            sign, key = sort_sign(idx)
            if not sign or not c:
                continue
            c = c if sign > 0 else -c
            cur = clean.get(key)
            new = c if cur is None else cur + c
            if new:
                clean[key] = new
            else:
                clean.pop(key, None)
        self.terms = clean

    @classmethod
    def _raw(cls, degree, nvars, terms):
        w = object.__new__(cls)
        w.degree, w.nvars, w.terms = degree, nvars, terms
        return w

    @classmethod
    def zero(cls, degree: int, nvars: int) -> KoszulElement:
        return cls._raw(degree, nvars, {})

    @classmethod
    def scalar(cls, q: Poly) -> KoszulElement:
        """The 0-form q."""
        return cls(0, q.nvars, {(): q})

    @classmethod
    def basis_form(cls, idx: Iterable[int], q: Poly) -> KoszulElement:
        idx = tuple(idx)
        return cls(len(idx), q.nvars, {idx: q})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, KoszulElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def coeff(self, idx) -> Poly:
        return self.terms.get(tuple(idx), Poly.zero(self.nvars))

    def _combine(self, other: KoszulElement, sign: int) -> KoszulElement:
        if not other.terms:
            return self
        if not self.terms:
            return other if sign > 0 else -other
        if other.degree != self.degree:
            raise PolyError(f"cannot add forms of degree {self.degree} and {other.degree}")
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            new = (c if sign > 0 else -c) if cur is None else (cur + c if sign > 0 else cur - c)
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return KoszulElement._raw(self.degree, self.nvars, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return KoszulElement._raw(self.degree, self.nvars, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> KoszulElement:
        if isinstance(c, Poly):
            return self.map_coeffs(lambda p: p * c)
        c = exact_scalar(c)
        if not c:
            return KoszulElement.zero(self.degree, self.nvars)
        return KoszulElement._raw(self.degree, self.nvars,
                                  {k: v.scale(c) for k, v in self.terms.items()})

    def map_coeffs(self, f: Callable[[Poly], Poly]) -> KoszulElement:
        out = {}
        for k, c in self.terms.items():
            v = f(c)
            if v:
                out[k] = v
        return KoszulElement._raw(self.degree, self.nvars, out)

    def __repr__(self):
        inner = ", ".join(f"{k}: {c!r}" for k, c in sorted(self.terms.items()))
        return f"KoszulElement(deg={self.degree}, {{{inner}}})"


def form_sum(items: Iterable[KoszulElement], degree: int, nvars: int) -> KoszulElement:
    out: dict = {}
    for w in items:
        if w.terms and w.degree != degree:
            raise PolyError(f"degree {w.degree} form in a degree {degree} sum")
        for k, c in w.terms.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
    return KoszulElement._raw(degree, nvars, {k: c for k, c in out.items() if c})


def _add_term(out: dict, idx: tuple, c: Poly):
    sign, key = sort_sign(idx)
    if not sign or not c:
        return
    if sign < 0:
        c = -c
    cur = out.get(key)
    new = c if cur is None else cur + c
    if new:
        out[key] = new
    else:
        out.pop(key, None)


def delta(w: KoszulElement, F: GFrame) -> KoszulElement:
    """Koszul differential dg_i -> g_i."""
    if w.degree == 0:
        # the complex stops at degree 0
        return KoszulElement.zero(0, w.nvars)
    out: dict = {}
    for idx, q in w.terms.items():
        for m, k in enumerate(idx):
            c = q * F.g[k]
            if m % 2:
                c = -c
            rest = idx[:m] + idx[m + 1:]
            cur = out.get(rest)
            new = c if cur is None else cur + c
            if new:
                out[rest] = new
            else:
                out.pop(rest, None)
    return KoszulElement._raw(w.degree - 1, w.nvars, out)


def wedge(a: KoszulElement, b: KoszulElement) -> KoszulElement:
    """Exterior product; sign from sorting the concatenated index tuple."""
    out: dict = {}
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            _add_term(out, ia + ib, ca * cb)
    return KoszulElement._raw(a.degree + b.degree, a.nvars, out)


def nabla(w: KoszulElement, F: GFrame) -> KoszulElement:
    """sum_I sum_j d/dg_j(q_I) dg_j ^ dg_I (new factor wedged on the left)."""
    out: dict = {}
    for idx, q in w.terms.items():
        for j in range(F.s):
            if j in idx:
                continue
            _add_term(out, (j,) + idx, partial(q, j, F))
    return KoszulElement._raw(w.degree + 1, w.nvars, out)


def h_nabla(w: KoszulElement, F: GFrame) -> KoszulElement:
    """de Rham contraction in closed form.

    c_N g^N dg_I  ->  sum_j N_j/(|N| + |I|) c_N g^(N - e_j) dg_j ^ dg_I.
    """
    k = w.degree
    out: dict = {}
    for idx, q in w.terms.items():
        for N, c in g_expand(q, F).items():
            size = sum(N)
            for j in range(F.s):
                if not N[j] or j in idx:
                    continue
                M = N[:j] + (N[j] - 1,) + N[j + 1:]
                _add_term(out, (j,) + idx, c.scale(Fraction(N[j], size + k)) * F.gpow(M))
    return KoszulElement._raw(k + 1, w.nvars, out)


def sigma_pi(w: KoszulElement, F: GFrame) -> KoszulElement:
    """Project to Q/(g) and split back: normal form on 0-forms, zero on higher forms."""
    if w.degree != 0:
        return KoszulElement.zero(w.degree, w.nvars)
    return w.map_coeffs(F.sigma)


def reduce_mod(w: KoszulElement, gb) -> KoszulElement:
    """Normal-form every coefficient modulo the ideal of ``gb``."""
    return w.map_coeffs(gb.reduce)


def is_cycle_mod(w: KoszulElement, F: GFrame, gb) -> bool:
    """True if every coefficient of delta(w) lies in the ideal of ``gb``."""
    if w.degree == 0:
        return True
    return reduce_mod(delta(w, F), gb).is_zero()


def form_to_json(w: KoszulElement, F: GFrame) -> list[dict]:
    return [{"dg": [k + 1 for k in idx], "coeff": F.format(w.terms[idx])}
            for idx in sorted(w.terms)]


def form_from_json(data: list[dict], F: GFrame, degree: int | None = None) -> KoszulElement:
    terms = {}
    deg = degree
    for item in data:
        idx = tuple(int(k) - 1 for k in item["dg"])
        if any(not 0 <= k < F.s for k in idx):
            raise PolyError(f"dg index out of range in {item['dg']}")
        if deg is None:
            deg = len(idx)
        p = F.parse(item["coeff"])
        sign, key = sort_sign(idx)
        if len(idx) != deg:
            raise PolyError(f"mixed form degrees in {data}")
        if sign:
            terms[key] = terms.get(key, Poly.zero(F.nvars)) + (p if sign > 0 else -p)
    return KoszulElement(deg or 0, F.nvars, terms)


def format_form(w: KoszulElement, F: GFrame) -> str:
    if not w.terms:
        return "0"
    parts = []
    for idx in sorted(w.terms):
        dg = "".join(f"dg{k + 1}" for k in idx) or "1"
        parts.append(f"({F.format(w.terms[idx])})*{dg}")
    return " + ".join(parts)
